#pragma once

// Quadratic rewrite-until-stable reduction, used as an oracle for the
// stack-based reduction in Word::push_back.

#include <vector>

#include "overshear/amalgam.hpp"

namespace overshear::testing {

template <amalgam::FactorTraits T>
std::vector<amalgam::Letter<T>> naive_reduce(std::vector<amalgam::Letter<T>> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      if (T::is_identity(w[i].factor, w[i].elem)) {
        w.erase(w.begin() + static_cast<long>(i));
        changed = true;
      }
    }
    for (std::size_t i = 0; i + 1 < w.size() && !changed; ++i) {
      if (w[i].factor == w[i + 1].factor) {
        w[i].elem = T::compose(w[i].factor, w[i].elem, w[i + 1].elem);
        w.erase(w.begin() + static_cast<long>(i) + 1);
        changed = true;
      }
    }
    for (std::size_t i = 0; w.size() >= 2 && i < w.size() && !changed; ++i) {
      if (T::is_in_amalgam(w[i].factor, w[i].elem)) {
        w[i] = {amalgam::other(w[i].factor), T::transfer(w[i].factor, w[i].elem)};
        changed = true;
      }
    }
  }
  return w;
}

}  // namespace overshear::testing
