#include "treeot/profiles.hpp"

#include <map>

#include "treeot/error.hpp"

namespace treeot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

long parse_count(std::string_view text, std::string_view key) {
  const Rational v = parse_rational(text);
  if (v.get_den() != 1 || sign(v) < 0 || !v.get_num().fits_slong_p()) {
    throw Error(ErrorCode::ParseError, std::string(key) + " must be a nonnegative integer, got '" +
                                           std::string(text) + "'");
  }
  return v.get_num().get_si();
}

}  // namespace

ProfileSpec parse_profile_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "profile '" + std::string(text) + "' lacks a 'family:' prefix");
  }
  const auto head = trim(text.substr(0, colon));
  const auto body = trim(text.substr(colon + 1));
  ProfileSpec spec;

  if (head == "custom") {
    spec.kind = ProfileSpec::Kind::Custom;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
      throw Error(ErrorCode::ParseError, "custom profile must be a bracketed list, got '" + std::string(body) + "'");
    }
    const auto inner = trim(body.substr(1, body.size() - 2));
    if (inner.empty()) throw Error(ErrorCode::ParseError, "custom profile is empty");
    for (auto item : split(inner, ',')) {
      if (!item.empty() && item.front() == '"' && item.back() == '"' && item.size() >= 2) {
        item = item.substr(1, item.size() - 2);
      }
      spec.values.push_back(parse_rational(item));
    }
    validate_profile(RadialProfile{spec.values});
    return spec;
  }

  std::map<std::string, std::string, std::less<>> keys;
  if (!body.empty()) {
    for (auto item : split(body, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + std::string(item) + "'");
      keys.emplace(std::string(trim(item.substr(0, eq))), std::string(trim(item.substr(eq + 1))));
    }
  }
  auto take = [&](std::string_view key) -> std::string {
    auto it = keys.find(key);
    if (it == keys.end()) {
      throw Error(ErrorCode::ParseError, "profile '" + std::string(text) + "' needs " + std::string(key) + "=");
    }
    auto value = it->second;
    keys.erase(it);
    return value;
  };

  if (head == "srw") {
    spec.kind = ProfileSpec::Kind::Srw;
    spec.alpha = parse_rational(take("alpha"));
    check_alpha(spec.alpha);
    spec.n = parse_count(take("n"), "n");
  } else if (head == "sphere" || head == "ball") {
    spec.kind = head == "sphere" ? ProfileSpec::Kind::Sphere : ProfileSpec::Kind::Ball;
    spec.n = parse_count(take("r"), "r");
  } else {
    throw Error(ErrorCode::ParseError, "unknown profile family '" + std::string(head) + "'");
  }
  if (!keys.empty()) throw Error(ErrorCode::ParseError, "unexpected key '" + keys.begin()->first + "'");
  return spec;
}

std::string to_string(const ProfileSpec& spec) {
  switch (spec.kind) {
    case ProfileSpec::Kind::Srw:
      return "srw:alpha=" + to_string(spec.alpha) + ",n=" + std::to_string(spec.n);
    case ProfileSpec::Kind::Sphere:
      return "sphere:r=" + std::to_string(spec.n);
    case ProfileSpec::Kind::Ball:
      return "ball:r=" + std::to_string(spec.n);
    case ProfileSpec::Kind::Custom: {
      std::string out = "custom:[";
      for (std::size_t i = 0; i < spec.values.size(); ++i) {
        if (i) out += ",";
        out += to_string(spec.values[i]);
      }
      return out + "]";
    }
  }
  return {};
}

RadialProfile make_profile(const ProfileSpec& spec, long q) {
  const auto n = static_cast<std::size_t>(spec.n);
  switch (spec.kind) {
    case ProfileSpec::Kind::Srw:
      return srw_g_table(spec.alpha, q, n).column(n);
    case ProfileSpec::Kind::Sphere:
      return sphere_g_table(q, n).column(n);
    case ProfileSpec::Kind::Ball:
      return ball_g_table(q, n).column(n);
    case ProfileSpec::Kind::Custom:
      return RadialProfile{spec.values};
  }
  throw Error(ErrorCode::InvalidParams, "unknown profile kind");
}

}  // namespace treeot
