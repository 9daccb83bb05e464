#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treeot/genfun.hpp"
#include "treeot/radial.hpp"
#include "treeot/rational.hpp"

namespace treeot {

/// A profile as written on the command line:
///   "srw:alpha=1/2,n=6", "sphere:r=6", "ball:r=6", "custom:[1,0,1/3]".
struct ProfileSpec {
  enum class Kind { Srw, Sphere, Ball, Custom };
  Kind kind = Kind::Custom;
  Rational alpha;
  long n = 0;
  std::vector<Rational> values;
};

/// Errors: ParseError, InvalidAlpha.
ProfileSpec parse_profile_spec(std::string_view text);

std::string to_string(const ProfileSpec& spec);

/// The density l -> s(l) on the (q+1)-regular tree.
RadialProfile make_profile(const ProfileSpec& spec, long q);

}  // namespace treeot
