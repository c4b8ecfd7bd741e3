#include "sring/section.hpp"

#include "sring/error.hpp"
#include "sring/modarith.hpp"

namespace sring {

std::string Section::to_string() const {
  return "(" + std::to_string(l) + "," + std::to_string(u) + ")";
}

Section make_section(int n, int l, int u) {
  if (n < 1 || l < 1 || u < 1 || u % l != 0 || n % u != 0) {
    throw Error(ErrorCode::NotADivisor, "(" + std::to_string(l) + "," + std::to_string(u) +
                                            ") is not a section of Z_" + std::to_string(n));
  }
  return Section{n, l, u};
}

std::vector<Section> all_sections(int n) {
  std::vector<Section> out;
  const auto ds = divisors(n);
  for (int l : ds) {
    for (int u : ds) {
      if (u % l == 0) out.push_back(Section{n, l, u});
    }
  }
  return out;
}

bool is_subsection(const Section& t, const Section& s) noexcept {
  return t.l % s.l == 0 && s.u % t.u == 0 && t.u % t.l == 0;
}

int to_coord(const Section& s, int element) noexcept {
  return (element / (s.n / s.u)) % s.order();
}

ResidueSet project(const Section& s, const ResidueSet& x) {
  ResidueSet out(s.order());
  x.for_each([&](int e) { out.insert(to_coord(s, e)); });
  return out;
}

ResidueSet lift(const Section& s, const ResidueSet& coords) {
  ResidueSet out(s.n);
  const int step_u = s.n / s.u;
  const int step_l = s.n / s.l;
  coords.for_each([&](int j) {
    for (int h = 0; h < s.l; ++h) out.insert(mod(1LL * j * step_u + 1LL * h * step_l, s.n));
  });
  return out;
}

}  // namespace sring
