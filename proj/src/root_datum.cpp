#include "hecke/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "hecke/errors.hpp"

namespace hecke {

// ---------------------------------------------------------------- Weight

Weight::Weight(std::size_t rank) : n_(static_cast<std::uint8_t>(rank)) {
  if (rank > kMaxRank) throw InputError("lattice rank exceeds " + std::to_string(kMaxRank));
}

Weight::Weight(std::initializer_list<int> coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight::Weight(const std::vector<int>& coords) : Weight(coords.size()) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + n_, [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < n_; ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Weight operator*(int k, Weight w) {
  for (std::size_t i = 0; i < w.n_; ++i) w.c_[i] *= k;
  return w;
}

long Weight::dot(const Weight& o) const {
  long s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += static_cast<long>(c_[i]) * o.c_[i];
  return s;
}

std::size_t Weight::hash() const {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i)
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(c_[i])) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << w.to_string() << ')'; }

// ---------------------------------------------------------- SimpleSubset

SimpleSubset SimpleSubset::from_indices(std::initializer_list<int> idx) {
  return from_indices(std::vector<int>(idx));
}

SimpleSubset SimpleSubset::from_indices(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) {
    if (i < 0 || i >= 32) throw InputError("simple index out of range: " + std::to_string(i));
    m |= 1U << i;
  }
  return SimpleSubset(m);
}

SimpleSubset SimpleSubset::full(int semisimple_rank) {
  return SimpleSubset(semisimple_rank >= 32 ? ~0U : ((1U << semisimple_rank) - 1U));
}

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SimpleSubset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : indices()) {
    if (!first) os << ',';
    first = false;
    os << i + 1;
  }
  os << '}';
  return os.str();
}

// ------------------------------------------------------------------ Root

bool Root::positive() const {
  return std::any_of(simple_coords.begin(), simple_coords.end(), [](int x) { return x > 0; });
}

int Root::height() const { return std::accumulate(simple_coords.begin(), simple_coords.end(), 0); }

int Root::coroot_height() const {
  return std::accumulate(simple_coroot_coords.begin(), simple_coroot_coords.end(), 0);
}

// ------------------------------------------------------------- RootDatum

namespace {

Weight combine(const std::vector<int>& coeffs, const std::vector<Weight>& basis, int rank) {
  Weight out(static_cast<std::size_t>(rank));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) out += coeffs[k] * basis[k];
  return out;
}

// Integral solution of the square system A x = b, if one exists.
std::optional<std::vector<int>> solve_integral(std::vector<std::vector<long>> a, std::vector<long> b) {
  const std::size_t n = a.size();
  // Fraction-free elimination with rational back substitution.
  struct Frac {
    long num, den;
  };
  std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = {a[i][j], 1};
    m[i][n] = {b[i], 1};
  }
  auto norm = [](Frac f) {
    if (f.den < 0) f = {-f.num, -f.den};
    long g = std::gcd(f.num, f.den);
    if (g > 1) f = {f.num / g, f.den / g};
    return f;
  };
  auto sub = [&](Frac x, Frac y) { return norm({x.num * y.den - y.num * x.den, x.den * y.den}); };
  auto mul = [&](Frac x, Frac y) { return norm({x.num * y.num, x.den * y.den}); };
  auto div = [&](Frac x, Frac y) { return norm({x.num * y.den, x.den * y.num}); };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].num == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].num == 0) continue;
      Frac f = div(m[r][col], m[col][col]);
      for (std::size_t c = col; c <= n; ++c) m[r][c] = sub(m[r][c], mul(f, m[col][c]));
    }
  }
  std::vector<int> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Frac v = div(m[i][n], m[i][i]);
    if (v.den != 1) return std::nullopt;
    x[i] = static_cast<int>(v.num);
  }
  return x;
}

}  // namespace

RootDatum::RootDatum(std::string name, std::vector<std::vector<int>> cartan, std::vector<Weight> simple_roots,
                     std::vector<Weight> simple_coroots)
    : name_(std::move(name)),
      cartan_(std::move(cartan)),
      simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  if (simple_roots_.empty()) throw InputError("root datum needs at least one simple root");
  rank_ = static_cast<int>(simple_roots_.front().size());
  for (int i = 0; i < semisimple_rank(); ++i) names_.push_back("s" + std::to_string(i + 1));
  validate();
  build_roots();
  build_components();
  build_corrections();
}

void RootDatum::validate() const {
  const std::size_t r = simple_roots_.size();
  if (rank_ <= 0 || static_cast<std::size_t>(rank_) > kMaxRank)
    throw InputError("lattice rank must be in 1.." + std::to_string(kMaxRank));
  if (r > 16) throw InputError("too many simple roots");
  if (simple_coroots_.size() != r) throw InputError("simple roots and coroots differ in number");
  if (cartan_.size() != r) throw InputError("Cartan matrix has wrong number of rows");
  for (std::size_t i = 0; i < r; ++i) {
    if (cartan_[i].size() != r) throw InputError("Cartan matrix is not square");
    if (simple_roots_[i].size() != static_cast<std::size_t>(rank_) ||
        simple_coroots_[i].size() != static_cast<std::size_t>(rank_))
      throw InputError("simple root/coroot has wrong length");
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const int a = cartan_[i][j];
      if (i == j && a != 2) throw InputError("Cartan diagonal entry (" + std::to_string(i + 1) + ") is not 2");
      if (i != j && a > 0) throw InputError("Cartan off-diagonal entry is positive");
      if (i != j && (a == 0) != (cartan_[j][i] == 0)) throw InputError("Cartan matrix zero pattern is not symmetric");
      if (pairing_with(simple_roots_[i], simple_coroots_[j]) != a)
        throw InputError("Cartan entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") disagrees with <alpha_i, alpha_j^vee>");
    }
}

void RootDatum::build_roots() {
  const int r = semisimple_rank();
  using Key = std::vector<int>;
  std::map<Key, Key> found;  // root simple coords -> coroot simple coords
  std::deque<Key> queue;
  for (int i = 0; i < r; ++i) {
    Key e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  constexpr std::size_t kRootCap = 4096;
  while (!queue.empty()) {
    Key b = queue.front();
    queue.pop_front();
    const Key c = found.at(b);
    for (int j = 0; j < r; ++j) {
      int pb = 0, pc = 0;
      for (int k = 0; k < r; ++k) {
        pb += b[static_cast<std::size_t>(k)] * cartan_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        pc += c[static_cast<std::size_t>(k)] * cartan_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      }
      Key nb = b, nc = c;
      nb[static_cast<std::size_t>(j)] -= pb;
      nc[static_cast<std::size_t>(j)] -= pc;
      if (found.emplace(nb, nc).second) {
        if (found.size() > kRootCap) throw InputError("root system is infinite (Cartan matrix not of finite type)");
        queue.push_back(nb);
      }
    }
  }
  std::vector<Root> pos, neg;
  for (const auto& [b, c] : found) {
    const bool any_pos = std::any_of(b.begin(), b.end(), [](int x) { return x > 0; });
    const bool any_neg = std::any_of(b.begin(), b.end(), [](int x) { return x < 0; });
    if (any_pos && any_neg) throw InputError("root with mixed-sign simple coordinates (not a finite root system)");
    Root root{combine(b, simple_roots_, rank_), combine(c, simple_coroots_, rank_), b, c};
    (any_pos ? pos : neg).push_back(std::move(root));
  }
  std::sort(pos.begin(), pos.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.simple_coords > y.simple_coords;
  });
  if (pos.size() != neg.size()) throw InputError("root system is not symmetric");
  num_positive_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& p : pos) {
    Root n = p;
    n.root = -n.root;
    n.coroot = -n.coroot;
    for (auto& x : n.simple_coords) x = -x;
    for (auto& x : n.simple_coroot_coords) x = -x;
    roots_.push_back(std::move(n));
  }
}

void RootDatum::build_components() {
  const int r = semisimple_rank();
  std::vector<int> comp(static_cast<std::size_t>(r), -1);
  int nc = 0;
  for (int i = 0; i < r; ++i) {
    if (comp[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<int> stack{i};
    comp[static_cast<std::size_t>(i)] = nc;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < r; ++b)
        if (comp[static_cast<std::size_t>(b)] < 0 && cartan_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0) {
          comp[static_cast<std::size_t>(b)] = nc;
          stack.push_back(b);
        }
    }
    ++nc;
  }
  components_.assign(static_cast<std::size_t>(nc), SimpleSubset{});
  for (int i = 0; i < r; ++i)
    components_[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] =
        components_[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])] | SimpleSubset::from_indices({i});
  for (const auto& c : components_) {
    int best = -1;
    for (int k = 0; k < num_positive_; ++k) {
      const auto& rt = roots_[static_cast<std::size_t>(k)];
      bool inside = true;
      for (int i = 0; i < r; ++i)
        if (rt.simple_coords[static_cast<std::size_t>(i)] != 0 && !c.contains(i)) inside = false;
      if (!inside) continue;
      if (best < 0 || rt.coroot_height() > roots_[static_cast<std::size_t>(best)].coroot_height()) best = k;
    }
    affine_roots_.push_back(best);
  }
}

void RootDatum::build_corrections() {
  const int r = semisimple_rank();
  Weight two_rho = zero();
  for (int k = 0; k < num_positive_; ++k) two_rho += roots_[static_cast<std::size_t>(k)].root;
  for (int i = 0; i < r; ++i) {
    std::optional<Weight> fundamental;
    if (r == rank_) {
      std::vector<std::vector<long>> a(static_cast<std::size_t>(r), std::vector<long>(static_cast<std::size_t>(r)));
      std::vector<long> b(static_cast<std::size_t>(r), 0);
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = simple_coroots_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(j)] = (i == j) ? 1 : 0;
      }
      if (auto x = solve_integral(a, b)) fundamental = Weight(*x);
    } else {
      // Central directions: search a small box for a lattice vector with
      // the fundamental-weight pairings.
      const int n = rank_;
      std::vector<int> v(static_cast<std::size_t>(n), -2);
      while (!fundamental) {
        Weight w(v);
        bool ok = true;
        for (int j = 0; j < r && ok; ++j) ok = pairing(w, j) == (i == j ? 1 : 0);
        if (ok) fundamental = w;
        int k = 0;
        while (k < n && ++v[static_cast<std::size_t>(k)] > 2) v[static_cast<std::size_t>(k++)] = -2;
        if (k == n) break;
      }
    }
    corrections_.push_back(fundamental ? *fundamental : two_rho);
  }
}

RootDatum RootDatum::weight_lattice(std::string name, std::vector<std::vector<int>> cartan) {
  const std::size_t r = cartan.size();
  std::vector<Weight> roots, coroots;
  for (std::size_t i = 0; i < r; ++i) {
    roots.emplace_back(cartan[i]);
    Weight e(r);
    e[i] = 1;
    coroots.push_back(e);
  }
  return RootDatum(std::move(name), std::move(cartan), std::move(roots), std::move(coroots));
}

RootDatum RootDatum::root_lattice(std::string name, std::vector<std::vector<int>> cartan) {
  const std::size_t r = cartan.size();
  std::vector<Weight> roots, coroots;
  for (std::size_t i = 0; i < r; ++i) {
    Weight e(r);
    e[i] = 1;
    roots.push_back(e);
    Weight c(r);
    for (std::size_t k = 0; k < r; ++k) c[k] = cartan[k][i];
    coroots.push_back(c);
  }
  return RootDatum(std::move(name), std::move(cartan), std::move(roots), std::move(coroots));
}

std::vector<std::string> RootDatum::preset_names() { return {"A1", "A2", "B2", "G2", "GL2", "A1adj", "A2adj"}; }

RootDatum RootDatum::preset(const std::string& name) {
  if (name == "A1" || name == "A1affine") return weight_lattice("A1", {{2}});
  if (name == "A2") return weight_lattice("A2", {{2, -1}, {-1, 2}});
  if (name == "B2") return weight_lattice("B2", {{2, -2}, {-1, 2}});
  if (name == "G2") return weight_lattice("G2", {{2, -1}, {-3, 2}});
  if (name == "A1adj") return root_lattice("A1adj", {{2}});
  if (name == "A2adj") return root_lattice("A2adj", {{2, -1}, {-1, 2}});
  if (name == "GL2") return RootDatum("GL2", {{2}}, {Weight{1, -1}}, {Weight{1, -1}});
  throw InputError("unknown root datum preset '" + name + "'");
}

RootDatum RootDatum::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("root datum JSON: ") + e.what());
  }
  try {
    const std::string name = j.value("name", std::string("custom"));
    auto cartan = j.at("cartan").get<std::vector<std::vector<int>>>();
    const auto& lat = j.at("lattice");
    RootDatum out = [&] {
      if (lat.is_string()) {
        const auto kind = lat.get<std::string>();
        if (kind == "weight") return weight_lattice(name, cartan);
        if (kind == "root") return root_lattice(name, cartan);
        throw InputError("lattice must be \"weight\", \"root\" or an object");
      }
      std::vector<Weight> roots, coroots;
      for (const auto& v : lat.at("simple_roots")) roots.emplace_back(v.get<std::vector<int>>());
      for (const auto& v : lat.at("simple_coroots")) coroots.emplace_back(v.get<std::vector<int>>());
      return RootDatum(name, cartan, roots, coroots);
    }();
    if (j.contains("rank") && j.at("rank").get<int>() != out.rank())
      throw InputError("declared rank disagrees with lattice dimension");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("root datum JSON: ") + e.what());
  }
}

int RootDatum::simple_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int RootDatum::root_index(const Weight& simple_coords_as_weight) const {
  const auto want = simple_coords_as_weight.to_vector();
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k].simple_coords == want) return static_cast<int>(k);
  return -1;
}

int RootDatum::pairing(const Weight& lambda, int j) const {
  if (j < 0 || j >= semisimple_rank()) throw InputError("coroot index out of range: " + std::to_string(j));
  return pairing_with(lambda, simple_coroots_[static_cast<std::size_t>(j)]);
}

int RootDatum::pairing_with(const Weight& lambda, const Weight& covector) {
  return static_cast<int>(lambda.dot(covector));
}

Weight RootDatum::reflect(int i, const Weight& lambda) const {
  return lambda - pairing(lambda, i) * simple_roots_[static_cast<std::size_t>(i)];
}

Weight RootDatum::reflect_root(int k, const Weight& lambda) const {
  if (k < 0 || k >= static_cast<int>(roots_.size())) throw InputError("root index out of range");
  const auto& rt = roots_[static_cast<std::size_t>(k)];
  return lambda - pairing_with(lambda, rt.coroot) * rt.root;
}

bool RootDatum::is_dominant_for(const Weight& lambda, SimpleSubset I) const {
  for (int i : I.indices())
    if (pairing(lambda, i) < 0) return false;
  return true;
}

std::pair<Weight, std::vector<int>> RootDatum::dominant_representative(const Weight& lambda, SimpleSubset I) const {
  Weight mu = lambda;
  std::vector<int> applied;  // s_{i1} applied first
  constexpr int kCap = 100000;
  for (int iter = 0;; ++iter) {
    if (iter > kCap) throw InternalError("dominant_representative did not terminate");
    int bad = -1;
    for (int i : I.indices())
      if (pairing(mu, i) < 0) {
        bad = i;
        break;
      }
    if (bad < 0) break;
    mu = reflect(bad, mu);
    applied.push_back(bad);
  }
  // mu = s_{ik} ... s_{i1}(lambda): the group word reads in reverse order.
  std::reverse(applied.begin(), applied.end());
  return {mu, applied};
}

std::pair<Weight, Weight> RootDatum::dominant_difference(const Weight& lambda) const {
  Weight nu = zero();
  for (int i = 0; i < semisimple_rank(); ++i) {
    const int d = pairing(lambda, i);
    if (d < 0) nu += (-d) * corrections_[static_cast<std::size_t>(i)];
  }
  return {lambda + nu, nu};
}

long RootDatum::invariant_form(const Weight& lambda, const Weight& mu) const {
  long s = 0;
  for (int k = 0; k < num_positive_; ++k) {
    const auto& c = roots_[static_cast<std::size_t>(k)].coroot;
    s += static_cast<long>(pairing_with(lambda, c)) * pairing_with(mu, c);
  }
  return s;
}

SimpleSubset RootDatum::parse_subset(const std::string& text) const {
  std::string t;
  for (char ch : text)
    if (ch != '{' && ch != '}') t += ch;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream is(t);
  std::string tok;
  std::vector<int> idx;
  while (is >> tok) {
    if (tok == "S") return all_simple();
    if (tok == "none" || tok == "empty") continue;
    int i = simple_index(tok);
    if (i < 0) {
      try {
        std::size_t used = 0;
        i = std::stoi(tok, &used) - 1;
        if (used != tok.size()) i = -1;
      } catch (const std::exception&) {
        i = -1;
      }
    }
    if (i < 0 || i >= semisimple_rank()) throw InputError("bad simple reflection '" + tok + "' in subset");
    idx.push_back(i);
  }
  return SimpleSubset::from_indices(idx);
}

}  // namespace hecke
