#include "hecke/ext_affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Weight parse_coords(const std::string& text, int rank) {
  std::vector<int> v;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("bad integer '" + tok + "' in weight '" + text + "'");
    }
  }
  if (v.size() == 1 && v[0] == 0) v.assign(static_cast<std::size_t>(rank), 0);
  if (static_cast<int>(v.size()) != rank)
    throw InputError("weight '" + text + "' has " + std::to_string(v.size()) + " coordinates, expected " +
                     std::to_string(rank));
  return Weight(v);
}

}  // namespace

ExtAffineWeyl::ExtAffineWeyl(std::shared_ptr<const WeylGroup> finite) : finite_(std::move(finite)) {
  const RootDatum& d = datum();
  for (int i = 0; i < d.semisimple_rank(); ++i) {
    generators_.push_back(from_finite(finite_->simple(i)));
    generator_names_.push_back(d.simple_name(i));
  }
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    const int k = d.affine_root_index(static_cast<int>(c));
    generators_.push_back({d.roots()[static_cast<std::size_t>(k)].root, finite_->reflection(k)});
    generator_names_.push_back(c == 0 ? "s0" : "s0_" + std::to_string(c + 1));
  }
  for (int k = 0; k < num_generators(); ++k) {
    const auto& g = generators_[static_cast<std::size_t>(k)];
    if (length(g) != 1 || !(multiply(g, g) == identity()))
      throw InternalError("affine generator " + generator_names_[static_cast<std::size_t>(k)] +
                          " is not a length-one involution");
  }
}

ExtAffElt ExtAffineWeyl::multiply(const ExtAffElt& x, const ExtAffElt& y) const {
  return {x.translation + finite_->act(x.finite, y.translation), finite_->multiply(x.finite, y.finite)};
}

ExtAffElt ExtAffineWeyl::inverse(const ExtAffElt& x) const {
  const WeylElt wi = finite_->inverse(x.finite);
  return {-finite_->act(wi, x.translation), wi};
}

int ExtAffineWeyl::length(const ExtAffElt& x) const {
  const RootDatum& d = datum();
  const auto& roots = d.roots();
  int len = 0;
  for (int k = 0; k < d.num_positive_roots(); ++k) {
    int p = RootDatum::pairing_with(x.translation, roots[static_cast<std::size_t>(k)].coroot);
    if (finite_->inverse_inverts(x.finite, k)) p -= 1;
    len += p < 0 ? -p : p;
  }
  return len;
}

ExtAffElt ExtAffineWeyl::mul_gen_right(const ExtAffElt& x, int k) const {
  if (is_finite_generator(k)) return {x.translation, finite_->mul_simple_right(x.finite, k)};
  return multiply(x, generator(k));
}

ExtAffElt ExtAffineWeyl::mul_gen_left(int k, const ExtAffElt& x) const {
  if (is_finite_generator(k)) {
    return {datum().reflect(k, x.translation), finite_->mul_simple_left(k, x.finite)};
  }
  return multiply(generator(k), x);
}

const AffineWord& ExtAffineWeyl::reduced_word(const ExtAffElt& x) const {
  {
    std::shared_lock lock(word_mutex_);
    auto it = words_.find(x);
    if (it != words_.end()) return it->second;
  }
  std::vector<ExtAffElt> chain{x};
  std::vector<int> letters;
  ExtAffElt cur = x;
  int len = length(cur);
  while (len > 0) {
    int found = -1;
    for (int k = 0; k < num_generators(); ++k) {
      ExtAffElt next = mul_gen_left(k, cur);
      if (length(next) == len - 1) {
        found = k;
        cur = next;
        break;
      }
    }
    if (found < 0) throw InternalError("reduced_word: no left descent at positive length (length formula bug)");
    letters.push_back(found);
    chain.push_back(cur);
    --len;
  }
  std::unique_lock lock(word_mutex_);
  // Every suffix of the peeled word is a reduced word of the matching chain element.
  for (std::size_t i = 0; i < chain.size(); ++i) {
    AffineWord w{std::vector<int>(letters.begin() + static_cast<std::ptrdiff_t>(i), letters.end()), cur};
    words_.try_emplace(chain[i], std::move(w));
  }
  return words_.at(x);
}

std::pair<ExtAffElt, ExtAffElt> ExtAffineWeyl::waf_gamma_decompose(const ExtAffElt& x) const {
  const ExtAffElt gamma = reduced_word(x).gamma;
  return {multiply(x, inverse(gamma)), gamma};
}

ExtAffElt ExtAffineWeyl::evaluate(const AffineWord& w) const {
  ExtAffElt x = identity();
  for (int k : w.letters) x = mul_gen_right(x, k);
  return multiply(x, w.gamma);
}

bool ExtAffineWeyl::bruhat_leq(const ExtAffElt& x0, const ExtAffElt& y0) const {
  ExtAffElt x = x0, y = y0;
  for (;;) {
    const int lx = length(x), ly = length(y);
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    const int k = reduced_word(y).letters.front();
    ExtAffElt kx = mul_gen_left(k, x);
    if (length(kx) < lx) x = kx;
    y = mul_gen_left(k, y);
  }
}

std::pair<Weight, WeylElt> ExtAffineWeyl::canonical_rep(const ExtAffElt& x, SimpleSubset I, SimpleSubset J) const {
  auto [w1, z, w2] = finite_->double_coset_decompose(x.finite, I, J);
  const Weight mu = finite_->act(finite_->inverse(w1), x.translation);
  const SimpleSubset K = finite_->parabolic_intersection(z, I, J);
  return {datum().dominant_representative(mu, K).first, z};
}

std::tuple<WeylElt, ExtAffElt, WeylElt> ExtAffineWeyl::double_coset_decompose(const ExtAffElt& x0, SimpleSubset I,
                                                                             SimpleSubset J) const {
  ExtAffElt x = x0;
  WeylElt w1 = finite_->identity(), w2 = finite_->identity();
  int len = length(x);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : I.indices()) {
      ExtAffElt nx = mul_gen_left(i, x);
      if (int nl = length(nx); nl < len) {
        x = nx;
        len = nl;
        w1 = finite_->mul_simple_right(w1, i);
        moved = true;
      }
    }
    for (int j : J.indices()) {
      ExtAffElt nx = mul_gen_right(x, j);
      if (int nl = length(nx); nl < len) {
        x = nx;
        len = nl;
        w2 = finite_->mul_simple_left(j, w2);
        moved = true;
      }
    }
  }
  return {w1, x, w2};
}

ExtAffElt ExtAffineWeyl::minimal_length_rep(const Weight& lambda, WeylElt z, SimpleSubset I, SimpleSubset J) const {
  if (!finite_->is_min_double_coset_rep(z, I, J))
    throw InputError("minimal_length_rep: z = " + finite_->name(z) + " is not in W^{IJ}");
  const SimpleSubset K = finite_->parabolic_intersection(z, I, J);
  if (!datum().is_dominant_for(lambda, K))
    throw InputError("minimal_length_rep: weight " + lambda.to_string() + " is not dominant for " + K.to_string());
  return std::get<1>(double_coset_decompose({lambda, z}, I, J));
}

std::vector<ExtAffElt> ExtAffineWeyl::gamma_elements(int box) const {
  const RootDatum& d = datum();
  const int n = d.rank();
  std::vector<ExtAffElt> out;
  std::vector<int> v(static_cast<std::size_t>(n), -box);
  for (;;) {
    const Weight lambda(v);
    bool candidate = true;
    for (int k = 0; k < d.num_positive_roots() && candidate; ++k) {
      const int p = RootDatum::pairing_with(lambda, d.roots()[static_cast<std::size_t>(k)].coroot);
      candidate = (p == 0 || p == 1);
    }
    if (candidate)
      for (auto w : finite_->elements())
        if (length({lambda, w}) == 0) {
          out.push_back({lambda, w});
          break;
        }
    int k = 0;
    while (k < n && ++v[static_cast<std::size_t>(k)] > box) v[static_cast<std::size_t>(k++)] = -box;
    if (k == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtAffElt ExtAffineWeyl::gamma_with_translation(const Weight& lambda) const {
  for (auto w : finite_->elements())
    if (length({lambda, w}) == 0) return {lambda, w};
  throw InputError("no length-zero element has translation part " + lambda.to_string());
}

std::vector<ExtAffElt> ExtAffineWeyl::enumerate_window(int max_len, int box) const {
  if (max_len < 0) throw InputError("enumerate_window: max_len must be nonnegative");
  std::vector<ExtAffElt> waf{identity()};
  std::vector<ExtAffElt> layer{identity()};
  std::set<ExtAffElt> seen{identity()};
  for (int len = 0; len < max_len; ++len) {
    std::vector<ExtAffElt> next;
    for (const auto& y : layer)
      for (int k = 0; k < num_generators(); ++k) {
        ExtAffElt z = mul_gen_left(k, y);
        if (length(z) == len + 1 && seen.insert(z).second) next.push_back(z);
      }
    waf.insert(waf.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<ExtAffElt> out;
  for (const auto& g : gamma_elements(box))
    for (const auto& y : waf) out.push_back(multiply(y, g));
  std::sort(out.begin(), out.end(), [this](const ExtAffElt& a, const ExtAffElt& b) {
    const int la = length(a), lb = length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

std::vector<Weight> ExtAffineWeyl::weight_window(int n) const {
  const RootDatum& d = datum();
  const int rank = d.rank();
  std::set<Weight> out;
  std::vector<int> v(static_cast<std::size_t>(rank), -n);
  for (;;) {
    const Weight lambda(v);
    if (d.is_dominant_for(lambda, d.all_simple()))
      for (auto w : finite_->elements()) out.insert(finite_->act(w, lambda));
    int k = 0;
    while (k < rank && ++v[static_cast<std::size_t>(k)] > n) v[static_cast<std::size_t>(k++)] = -n;
    if (k == rank) break;
  }
  return {out.begin(), out.end()};
}

std::string ExtAffineWeyl::name(const ExtAffElt& x) const {
  const AffineWord& w = reduced_word(x);
  std::ostringstream os;
  bool first = true;
  for (int k : w.letters) {
    if (!first) os << ' ';
    first = false;
    os << generator_name(k);
  }
  if (!(w.gamma == identity())) {
    if (!first) os << ' ';
    first = false;
    os << "g:" << w.gamma.translation.to_string();
  }
  return first ? "1" : os.str();
}

ExtAffElt ExtAffineWeyl::parse(const std::string& word) const {
  std::istringstream is(word);
  std::string tok;
  ExtAffElt x = identity();
  while (is >> tok) {
    if (tok == "1") continue;
    if (tok.rfind("g:", 0) == 0) {
      x = multiply(x, gamma_with_translation(parse_coords(tok.substr(2), datum().rank())));
      continue;
    }
    if (tok.rfind("t:", 0) == 0) {
      x = multiply(x, translation(parse_coords(tok.substr(2), datum().rank())));
      continue;
    }
    auto it = std::find(generator_names_.begin(), generator_names_.end(), tok);
    if (it == generator_names_.end()) throw InputError("unknown generator '" + tok + "'");
    x = mul_gen_right(x, static_cast<int>(it - generator_names_.begin()));
  }
  return x;
}

}  // namespace hecke
