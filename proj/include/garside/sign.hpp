#pragma once

namespace garside {

/// Trichotomy outcome for a group element relative to (H, G1), or the
/// s1-sign of a braid word.
enum class Sign { Negative, Positive, InG1 };

inline const char* to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "negative";
    case Sign::Positive: return "positive";
    case Sign::InG1: return "in-g1";
  }
  return "?";
}

}  // namespace garside
