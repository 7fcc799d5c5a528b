#include "mapoly/ansatz.hpp"

#include <algorithm>
#include <functional>

#include "mapoly/error.hpp"

namespace mapoly {

std::string_view to_string(Relation r) { return r == Relation::Rel1 ? "rel1" : "rel2"; }

bool satisfies_rel1(const KHProfile& p) {
  const auto n = static_cast<std::int64_t>(p.k.size());
  for (std::size_t i = 0; i < p.k.size(); ++i) {
    std::int64_t s = 0;
    for (std::size_t a = 0; a < p.k.size(); ++a)
      if (a != i) s += p.h[i][a];
    if (s != p.k[i] * (n - 2) + 2) return false;
  }
  return true;
}

bool satisfies_rel2(const KHProfile& p) {
  for (std::size_t i = 0; i < p.k.size(); ++i)
    for (std::size_t j = 0; j < p.k.size(); ++j)
      if (i != j && p.h[i][j] * p.k[j] != p.h[j][i] * p.k[i]) return false;
  return true;
}

namespace {

RatVector base_vertex(int n) { return RatVector(n, Rat(-1)); }

// max{t in Z : base + t e_i in P}; requires base in P.
std::int64_t ray_length(const Polytope& p, const RatVector& base, int i) {
  const auto& h = p.facets();
  std::optional<Rat> best;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const auto ai = h.a()[r][i];
    if (ai <= 0) continue;
    Rat t = -h.slack(r, base) / ai;
    if (!best || t < *best) best = t;
  }
  if (!best) throw std::logic_error("unbounded ray in a bounded polytope");
  return to_int64(floor(*best));
}

void require_base_vertex(const Polytope& p) {
  if (!p.find_vertex(base_vertex(p.dim())))
    throw Error(ErrorCode::MissingBaseVertex, "(-1,...,-1) is not a vertex of the polytope");
}

}  // namespace

IntVector axis_lengths(const Polytope& p) {
  require_base_vertex(p);
  const int n = p.dim();
  IntVector k(n);
  for (int i = 0; i < n; ++i) k[i] = ray_length(p, base_vertex(n), i);
  return k;
}

IntMatrix h_max(const Polytope& p) {
  require_base_vertex(p);
  const int n = p.dim();
  IntMatrix h(n, IntVector(n, 0));
  for (int j = 0; j < n; ++j) {
    RatVector base = base_vertex(n);
    base[j] += 1;
    if (!p.facets().contains(base)) continue;
    for (int i = 0; i < n; ++i)
      if (i != j) h[i][j] = ray_length(p, base, i);
  }
  return h;
}

namespace {

// Enumerates H in the box [0, hmax] pair by pair. With `rel2` the entry
// H_ji is forced by H_ij; rows are pruned against the rel1 targets.
class ProfileSearch {
 public:
  ProfileSearch(IntVector k, IntMatrix hmax, bool rel2, bool stop_at_first)
      : k_(std::move(k)), hmax_(std::move(hmax)), rel2_(rel2), first_only_(stop_at_first) {
    n_ = static_cast<int>(k_.size());
    target_.resize(n_);
    for (int i = 0; i < n_; ++i) target_[i] = k_[i] * (n_ - 2) + 2;
    h_.assign(n_, IntVector(n_, 0));
    sum_.assign(n_, 0);
    room_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) room_[i] += hmax_[i][j];
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
  }

  std::vector<KHProfile> run() {
    if (n_ == 1) {
      // rel1 reads 0 = 2 - k_1; no off-diagonal entries to choose.
      if (target_[0] == 0) found_.push_back({k_, h_});
      return found_;
    }
    step(0);
    return found_;
  }

 private:
  bool feasible(int row) const { return sum_[row] <= target_[row] && sum_[row] + room_[row] >= target_[row]; }

  void assign(int i, int j, std::int64_t v) {
    room_[i] -= hmax_[i][j];
    sum_[i] += v;
    h_[i][j] = v;
  }
  void unassign(int i, int j) {
    sum_[i] -= h_[i][j];
    room_[i] += hmax_[i][j];
    h_[i][j] = 0;
  }

  void step(std::size_t idx) {
    if (first_only_ && !found_.empty()) return;
    if (idx == pairs_.size()) {
      for (int i = 0; i < n_; ++i)
        if (sum_[i] != target_[i]) return;
      found_.push_back({k_, h_});
      return;
    }
    const auto [i, j] = pairs_[idx];
    for (std::int64_t a = 0; a <= hmax_[i][j]; ++a) {
      if (rel2_) {
        // H_ji = H_ij k_j / k_i must be an integer inside the box.
        if ((a * k_[j]) % k_[i] != 0) continue;
        const std::int64_t b = a * k_[j] / k_[i];
        if (b > hmax_[j][i]) break;
        assign(i, j, a);
        assign(j, i, b);
        if (feasible(i) && feasible(j)) step(idx + 1);
        unassign(j, i);
        unassign(i, j);
      } else {
        assign(i, j, a);
        for (std::int64_t b = 0; b <= hmax_[j][i]; ++b) {
          assign(j, i, b);
          if (feasible(i) && feasible(j)) step(idx + 1);
          unassign(j, i);
        }
        unassign(i, j);
      }
    }
  }

  int n_ = 0;
  IntVector k_, target_, sum_, room_;
  IntMatrix hmax_, h_;
  bool rel2_, first_only_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<KHProfile> found_;
};

}  // namespace

std::vector<KHProfile> kh_feasible(const Polytope& p) {
  auto found = ProfileSearch(axis_lengths(p), h_max(p), true, false).run();
  std::sort(found.begin(), found.end(), [](const KHProfile& a, const KHProfile& b) { return a.h < b.h; });
  return found;
}

std::optional<Relation> failed_relation(const Polytope& p) {
  if (!kh_feasible(p).empty()) return std::nullopt;
  if (ProfileSearch(axis_lengths(p), h_max(p), false, true).run().empty()) return Relation::Rel1;
  return Relation::Rel2;
}

// ---------------------------------------------------------------------------

AnsatzTemplate::AnsatzTemplate(Polytope polytope, KHProfile profile, std::vector<Monomial> index_set,
                               std::map<Monomial, Rat> fixed, std::vector<Monomial> free,
                               std::vector<Monomial> positive_required)
    : polytope_(std::move(polytope)),
      profile_(std::move(profile)),
      index_set_(std::move(index_set)),
      fixed_(std::move(fixed)),
      free_(std::move(free)),
      positive_required_(std::move(positive_required)) {
  std::sort(index_set_.begin(), index_set_.end());
  std::sort(free_.begin(), free_.end());
  std::sort(positive_required_.begin(), positive_required_.end());
  for (auto m : index_set_) degree_bound_ = std::max(degree_bound_, m.degree());
  param_positive_.assign(free_.size(), false);
  for (std::size_t i = 0; i < free_.size(); ++i)
    param_positive_[i] = std::binary_search(positive_required_.begin(), positive_required_.end(), free_[i]);
}

std::optional<int> AnsatzTemplate::param_of(Monomial m) const {
  auto it = std::lower_bound(free_.begin(), free_.end(), m);
  if (it != free_.end() && *it == m) return static_cast<int>(it - free_.begin());
  return std::nullopt;
}

std::string AnsatzTemplate::param_name(int param) const {
  const auto e = free_.at(param).exponents(dim());
  std::string out = "a(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + ")";
}

ParamPoly AnsatzTemplate::polynomial() const {
  std::vector<ParamPoly::Term> terms;
  for (const auto& [m, c] : fixed_)
    if (sgn(c) != 0) terms.emplace_back(m, ParamCoeff(c));
  for (std::size_t i = 0; i < free_.size(); ++i) terms.emplace_back(free_[i], ParamCoeff::param(static_cast<int>(i)));
  return ParamPoly(dim(), std::move(terms));
}

PolyQ AnsatzTemplate::instantiate(const std::map<int, Rat>& values) const {
  std::vector<PolyQ::Term> terms;
  for (const auto& [m, c] : fixed_) terms.emplace_back(m, c);
  for (std::size_t i = 0; i < free_.size(); ++i) {
    auto it = values.find(static_cast<int>(i));
    if (it == values.end()) throw Error(ErrorCode::TemplateInconsistent, "parameter " + param_name(static_cast<int>(i)) + " has no value");
    terms.emplace_back(free_[i], it->second);
  }
  return PolyQ(dim(), std::move(terms));
}

namespace {

Rat binomial(std::int64_t n, std::int64_t m) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return Rat(r);
}

Rat int_pow(std::int64_t base, std::int64_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rat(r);
}

}  // namespace

AnsatzTemplate build_template(const Polytope& p, const KHProfile& profile) {
  const int n = p.dim();
  if (static_cast<int>(profile.k.size()) != n || static_cast<int>(profile.h.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "profile size differs from the polytope dimension");
  std::vector<Monomial> index_set;
  for (const auto& lp : p.lattice_points()) {
    IntVector e = lp;
    for (auto& x : e) x += 1;
    index_set.push_back(Monomial::from_exponents(e));
  }
  std::sort(index_set.begin(), index_set.end());
  auto in_index = [&](Monomial m) { return std::binary_search(index_set.begin(), index_set.end(), m); };

  std::map<Monomial, Rat> fixed;
  auto put = [&](Monomial m, const Rat& v) {
    if (!in_index(m)) {
      if (sgn(v) == 0) return;
      throw Error(ErrorCode::InconsistentConstraints,
                  "fixed coefficient " + to_string(v) + " at " + m.to_string(n) + " outside the lattice points");
    }
    auto [it, inserted] = fixed.emplace(m, v);
    if (!inserted && it->second != v)
      throw Error(ErrorCode::InconsistentConstraints, "coefficient of " + m.to_string(n) + " fixed to both " +
                                                          to_string(it->second) + " and " + to_string(v));
  };

  for (int i = 0; i < n; ++i) {
    const auto ki = profile.k[i];
    if (ki < 1) throw Error(ErrorCode::InconsistentConstraints, "k entries must be positive");
    for (std::int64_t m = 0; m <= ki; ++m) put(Monomial::var(i, static_cast<int>(m)), binomial(ki, m) / int_pow(ki, m));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto hij = profile.h[i][j];
      for (std::int64_t m = 0; m <= hij; ++m)
        put(Monomial::var(i, static_cast<int>(m)) * Monomial::var(j), binomial(hij, m) / int_pow(ki, m));
    }
  }
  // Indices on the lines m e_i + e_j beyond h_ij vanish.
  for (auto m : index_set) {
    if (fixed.count(m)) continue;
    const auto e = m.exponents(n);
    int support = 0, ones = 0;
    for (int v = 0; v < n; ++v) {
      support += e[v] != 0;
      ones += e[v] == 1;
    }
    if (support == 2 && ones >= 1) put(m, Rat(0));
  }

  std::vector<Monomial> free, positive;
  for (auto m : index_set)
    if (!fixed.count(m)) free.push_back(m);
  for (const auto& v : p.vertices()) {
    IntVector e(n);
    for (int i = 0; i < n; ++i) e[i] = to_int64(v[i].get_num()) + 1;
    auto m = Monomial::from_exponents(e);
    positive.push_back(m);
  }
  return AnsatzTemplate(p, profile, std::move(index_set), std::move(fixed), std::move(free), std::move(positive));
}

PolyQ simplex_solution(int n) {
  if (n < 1 || n > Monomial::kMaxVars) throw Error(ErrorCode::UnsupportedDimension, "simplex solution needs 1 <= n <= 7");
  std::vector<PolyQ::Term> terms{{Monomial{}, Rat(1)}};
  for (int i = 0; i < n; ++i) terms.emplace_back(Monomial::var(i), Rat(1, n + 1));
  return pow(PolyQ(n, std::move(terms)), static_cast<unsigned>(n + 1));
}

PolyQ product_solution(const PolyQ& f, const PolyQ& g) {
  const int k = f.nvars(), h = g.nvars();
  if (k + h > Monomial::kMaxVars) throw Error(ErrorCode::UnsupportedDimension, "product exceeds 7 variables");
  constexpr std::uint64_t kExpMask = (std::uint64_t{1} << 56) - 1;
  std::vector<PolyQ::Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& [mf, cf] : f.terms())
    for (const auto& [mg, cg] : g.terms()) {
      auto shifted = Monomial::from_key((mg.key() & ~kExpMask) | ((mg.key() & kExpMask) >> (8 * k)));
      terms.emplace_back(mf * shifted, cf * cg);
    }
  return PolyQ(k + h, std::move(terms));
}

}  // namespace mapoly
