#include "symcut/closed_forms.hpp"

#include <algorithm>
#include <charconv>

#include "symcut/errors.hpp"

namespace symcut {

namespace {

[[noreturn]] void unknown(const RootSystemType& t, std::string_view gamma) {
  throw Error(ErrorKind::UnknownCase,
              "no case for " + t.name() + " with subgroup '" + std::string(gamma) + "'");
}

// Order of a named subgroup of the cyclic center Z_{l+1} of A_l.
int cyclic_order(const RootSystemType& t, std::string_view gamma) {
  const int n = t.rank + 1;
  if (gamma == "full") return n;
  if (gamma.size() > 1 && gamma[0] == 'Z') {
    int k = 0;
    auto [ptr, ec] = std::from_chars(gamma.data() + 1, gamma.data() + gamma.size(), k);
    if (ec == std::errc() && ptr == gamma.data() + gamma.size() && k > 1 && n % k == 0) return k;
  }
  unknown(t, gamma);
}

enum class DShape { Full, E1, Spinor };

DShape d_shape(const RootSystemType& t, std::string_view gamma) {
  const int l = t.rank;
  if (gamma == "full" || (l % 2 == 1 && gamma == "Z4")) return DShape::Full;
  if (gamma == "gen=e1" || (l % 2 == 1 && gamma == "Z2")) return DShape::E1;
  if (l % 2 == 0 &&
      (gamma == "gen=e" + std::to_string(l - 1) || gamma == "gen=e" + std::to_string(l)))
    return DShape::Spinor;
  unknown(t, gamma);
}

void require_full(const RootSystemType& t, std::string_view gamma, int order) {
  if (gamma != "full" && gamma != "Z" + std::to_string(order)) unknown(t, gamma);
}

Rational q(long p, long r = 1) { return frac(p, r); }

}  // namespace

ClosedForm injectivity_closed_form(const RootSystemType& t, std::string_view gamma) {
  const int l = t.rank;
  switch (t.family) {
    case Family::A: {
      const int r = cyclic_order(t, gamma);
      if (r == l + 1) return {"A", q(l, 2 * (l + 1))};
      if (l >= 3 && l % 2 == 1 && 2 * r == l + 1) return {"A", q(l - 1, l + 1)};
      if (l == 5 && r == 2) return {"A", q(3, 4)};
      return {"A", q(1)};
    }
    case Family::B:
      require_full(t, gamma, 2);
      return {"B", q(1, 2)};
    case Family::C:
      require_full(t, gamma, 2);
      return {"C", std::min(q(1), q(l, 4))};
    case Family::D:
      if (d_shape(t, gamma) != DShape::Spinor) return {"D", q(1, 2)};
      return {"D", std::min(q(1), q(l, 8))};
    case Family::E6:
      require_full(t, gamma, 3);
      return {"E6", q(2, 3)};
    case Family::E7:
      require_full(t, gamma, 2);
      return {"E7", q(3, 4)};
    default:
      unknown(t, gamma);
  }
}

ClosedForm diameter_closed_form(const RootSystemType& t, std::string_view gamma) {
  const long l = t.rank;
  switch (t.family) {
    case Family::A: {
      const int r = cyclic_order(t, gamma);
      if (r == l + 1) return {"I", q(l * (l + 2), 6 * (l + 1))};
      if (r == 2) {
        if (((l + 1) / 2) % 2 == 0) return {"II", q(3 * (l + 1), 8)};
        return {"II", q(3 * l - 1, 8)};
      }
      return {"open", std::nullopt};
    }
    case Family::B:
      require_full(t, gamma, 2);
      return {"III", q(l, 2)};
    case Family::C:
      require_full(t, gamma, 2);
      return {"IV", l % 2 == 0 ? q(l, 2) : q(2 * l - 1, 4)};
    case Family::D:
      switch (d_shape(t, gamma)) {
        case DShape::Full: return {"V", l % 2 == 0 ? q(l, 4) : q(2 * l - 1, 8)};
        case DShape::E1: return {"VI", q(l, 2)};
        case DShape::Spinor: return {"VII", l <= 6 ? q(2) : q(l, 4)};
      }
      break;
    case Family::E6:
      require_full(t, gamma, 3);
      return {"VIII", q(4, 3)};
    case Family::E7:
      require_full(t, gamma, 2);
      return {"IX", q(7, 4)};
    default:
      break;
  }
  unknown(t, gamma);
}

}  // namespace symcut
