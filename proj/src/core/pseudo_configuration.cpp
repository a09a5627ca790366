#include "ccs/core/pseudo_configuration.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <utility>

namespace ccs {

namespace {

constexpr int kCubeLimit = 128;
constexpr std::int64_t kFastCoordLimit = std::int64_t{1} << 40;

std::size_t choose2(std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; }
std::size_t choose3(std::size_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

bool fast_coordinate(const Rational& v) {
  return v.is_integer() && v.num() < kFastCoordLimit && v.num() > -kFastCoordLimit;
}

}  // namespace

std::size_t triple_count(int n) noexcept { return choose3(static_cast<std::size_t>(n)); }

std::size_t triple_index(int n, Label i, Label j, Label k) noexcept {
  const auto un = static_cast<std::size_t>(n);
  const auto ui = static_cast<std::size_t>(i);
  const auto uj = static_cast<std::size_t>(j);
  return choose3(un) - choose3(un - ui) + choose2(un - ui - 1) - choose2(un - uj) +
         static_cast<std::size_t>(k - j - 1);
}

int orientation_sign(const Point& a, const Point& b, const Point& c) {
  if (fast_coordinate(a.x) && fast_coordinate(a.y) && fast_coordinate(b.x) &&
      fast_coordinate(b.y) && fast_coordinate(c.x) && fast_coordinate(c.y)) {
    const __int128 det =
        static_cast<__int128>(b.x.num() - a.x.num()) * (c.y.num() - a.y.num()) -
        static_cast<__int128>(b.y.num() - a.y.num()) * (c.x.num() - a.x.num());
    return (det > 0) - (det < 0);
  }
  using boost::multiprecision::cpp_rational;
  auto q = [](const Rational& v) { return cpp_rational(v.num(), v.den()); };
  const cpp_rational det = (q(b.x) - q(a.x)) * (q(c.y) - q(a.y)) - (q(b.y) - q(a.y)) * (q(c.x) - q(a.x));
  return det.sign();
}

std::shared_ptr<const PseudoConfiguration::Data> PseudoConfiguration::make_data(
    int n, std::vector<Sign> signs, std::optional<std::vector<Point>> coords) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "a configuration needs at least 3 points");
  if (signs.size() != triple_count(n)) {
    throw Error(ErrorCode::BadShape, "expected " + std::to_string(triple_count(n)) +
                                         " triple signs, got " + std::to_string(signs.size()));
  }
  if (coords && coords->size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::BadShape, "coordinate count does not match n");
  }
  auto data = std::make_shared<Data>();
  data->n = n;
  data->signs = std::move(signs);
  data->coords = std::move(coords);
  if (n <= kCubeLimit) {
    const auto un = static_cast<std::size_t>(n);
    data->cube.assign(un * un * un, 0);
    auto put = [&](int a, int b, int c, Sign s) {
      data->cube[(static_cast<std::size_t>(a) * un + b) * un + c] = static_cast<std::int8_t>(s);
    };
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          const Sign s = data->signs[idx++];
          put(i, j, k, s);
          put(j, k, i, s);
          put(k, i, j, s);
          put(j, i, k, -s);
          put(i, k, j, -s);
          put(k, j, i, -s);
        }
  }
  return data;
}

Sign PseudoConfiguration::orient_slow(Label p, Label q, Label r) const noexcept {
  bool flip = false;
  if (p > q) std::swap(p, q), flip = !flip;
  if (q > r) std::swap(q, r), flip = !flip;
  if (p > q) std::swap(p, q), flip = !flip;
  const Sign s = data_->signs[triple_index(data_->n, p, q, r)];
  return flip ? -s : s;
}

PseudoConfiguration PseudoConfiguration::from_points(std::vector<Point> points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw Error(ErrorCode::NTooSmall, "a configuration needs at least 3 points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j]) {
        throw Error(ErrorCode::DuplicatePoint,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide",
                    {i, j});
      }
  std::vector<Sign> signs;
  signs.reserve(triple_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int s = orientation_sign(points[i], points[j], points[k]);
        if (s == 0) {
          throw Error(ErrorCode::CollinearTriple,
                      "points " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                          std::to_string(k) + " are collinear",
                      {i, j, k});
        }
        signs.push_back(s > 0 ? Sign::CCW : Sign::CW);
      }
  return PseudoConfiguration(make_data(n, std::move(signs), std::move(points)));
}

PseudoConfiguration PseudoConfiguration::from_signs(int n, std::vector<Sign> signs) {
  PseudoConfiguration cfg = unchecked(n, std::move(signs));
  ValidationReport report = validate_axioms(cfg);
  if (!report.pass()) throw AxiomViolation(std::move(report));
  return cfg;
}

namespace {

std::vector<Sign> parse_sign_string(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+') signs.push_back(Sign::CCW);
    else if (c == '-') signs.push_back(Sign::CW);
    else throw Error(ErrorCode::InvalidArgument, std::string("bad sign character '") + c + "'");
  }
  return signs;
}

}  // namespace

PseudoConfiguration PseudoConfiguration::from_sign_string(int n, std::string_view signs) {
  return from_signs(n, parse_sign_string(signs));
}

PseudoConfiguration PseudoConfiguration::unchecked(int n, std::vector<Sign> signs,
                                                   std::optional<std::vector<Point>> coords) {
  return PseudoConfiguration(make_data(n, std::move(signs), std::move(coords)));
}

std::string PseudoConfiguration::sign_string() const {
  std::string out;
  out.reserve(data_->signs.size());
  for (Sign s : data_->signs) out.push_back(to_char(s));
  return out;
}

void check_distinct_labels(const PseudoConfiguration& cfg, std::initializer_list<Label> labels) {
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    if (*it < 0 || *it >= cfg.size()) {
      throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(*it) + " out of range",
                  {*it});
    }
    for (auto jt = labels.begin(); jt != it; ++jt)
      if (*jt == *it) {
        throw Error(ErrorCode::RepeatedLabel, "label " + std::to_string(*it) + " repeated", {*it});
      }
  }
}

Sign PseudoConfiguration::orientation(Label p, Label q, Label r) const {
  check_distinct_labels(*this, {p, q, r});
  return orient(p, q, r);
}

PseudoConfiguration PseudoConfiguration::relabeled(std::span<const Label> perm) const {
  const int n = size();
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidArgument, "permutation length does not match n");
  }
  std::vector<bool> seen(n, false);
  for (Label l : perm) {
    if (l < 0 || l >= n || seen[l]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[l] = true;
  }
  return restricted(perm);
}

PseudoConfiguration PseudoConfiguration::restricted(std::span<const Label> labels) const {
  const int m = static_cast<int>(labels.size());
  for (std::size_t a = 0; a < labels.size(); ++a) {
    if (labels[a] < 0 || labels[a] >= size()) throw Error(ErrorCode::InvalidArgument, "label out of range");
    for (std::size_t b = 0; b < a; ++b)
      if (labels[a] == labels[b]) throw Error(ErrorCode::RepeatedLabel, "label repeated", {labels[a]});
  }
  std::vector<Sign> signs;
  signs.reserve(triple_count(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) signs.push_back(orient(labels[i], labels[j], labels[k]));
  std::optional<std::vector<Point>> coords;
  if (data_->coords) {
    coords.emplace();
    for (Label l : labels) coords->push_back((*data_->coords)[l]);
  }
  return PseudoConfiguration(make_data(m, std::move(signs), std::move(coords)));
}

PseudoConfiguration PseudoConfiguration::mirrored() const {
  std::vector<Sign> signs(data_->signs.begin(), data_->signs.end());
  for (Sign& s : signs) s = -s;
  std::optional<std::vector<Point>> coords = data_->coords;
  if (coords)
    for (Point& p : *coords) p.x = Rational(-p.x.num(), p.x.den());
  return PseudoConfiguration(make_data(size(), std::move(signs), std::move(coords)));
}

bool operator==(const PseudoConfiguration& a, const PseudoConfiguration& b) {
  return a.data_->n == b.data_->n && a.data_->signs == b.data_->signs &&
         a.data_->coords == b.data_->coords;
}

namespace {

// Calls on(axiom, witness) for every violated instance until it returns false.
template <class OnViolation>
void scan_axioms(const PseudoConfiguration& cfg, std::optional<Label> involving, OnViolation&& on) {
  const int n = cfg.size();
  auto mentions = [&](std::initializer_list<Label> ls) {
    if (!involving) return true;
    return std::find(ls.begin(), ls.end(), *involving) != ls.end();
  };

  // Interiority: tqr, ptr, pqt => pqr. The statement is invariant under
  // rotating (p,q,r), so p is taken as the smallest of the three.
  for (Label p = 0; p < n; ++p)
    for (Label q = p + 1; q < n; ++q)
      for (Label r = p + 1; r < n; ++r) {
        if (r == q || cfg.ccw(p, q, r)) continue;
        for (Label t = 0; t < n; ++t) {
          if (t == p || t == q || t == r) continue;
          if (cfg.ccw(t, q, r) && cfg.ccw(p, t, r) && cfg.ccw(p, q, t) && mentions({p, q, r, t})) {
            if (!on("interiority", std::vector<Label>{p, q, r, t})) return;
          }
        }
      }

  // Transitivity: tsp, tsq, tsr, tpq, tqr => tpr.
  std::vector<Label> side;
  side.reserve(n);
  for (Label t = 0; t < n; ++t)
    for (Label s = 0; s < n; ++s) {
      if (s == t) continue;
      side.clear();
      for (Label x = 0; x < n; ++x)
        if (x != t && x != s && cfg.ccw(t, s, x)) side.push_back(x);
      for (Label p : side)
        for (Label q : side) {
          if (q == p || !cfg.ccw(t, p, q)) continue;
          for (Label r : side) {
            if (r == p || r == q || !cfg.ccw(t, q, r) || cfg.ccw(t, p, r)) continue;
            if (!mentions({t, s, p, q, r})) continue;
            if (!on("transitivity", std::vector<Label>{t, s, p, q, r})) return;
          }
        }
    }
}

}  // namespace

ValidationReport validate_axioms(const PseudoConfiguration& cfg, std::size_t cap) {
  ValidationReport report;
  scan_axioms(cfg, std::nullopt, [&](const char* axiom, std::vector<Label> witness) {
    if (report.violations.size() >= cap) {
      report.truncated = true;
      return false;
    }
    report.violations.push_back({axiom, std::move(witness)});
    return true;
  });
  return report;
}

bool satisfies_axioms(const PseudoConfiguration& cfg, std::optional<Label> involving) {
  bool ok = true;
  scan_axioms(cfg, involving, [&](const char*, const std::vector<Label>&) {
    ok = false;
    return false;
  });
  return ok;
}

AxiomViolation::AxiomViolation(ValidationReport report)
    : Error(ErrorCode::AxiomViolation,
            std::to_string(report.violations.size()) + (report.truncated ? "+" : "") +
                " axiom instance(s) violated",
            report.violations.empty() ? std::vector<int>{} : report.violations.front().witness),
      report_(std::move(report)) {}

}  // namespace ccs
