#include "hecke/expr.hpp"

#include <cctype>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Weight fundamental_weight(const RootDatum& d, int k) {
  if (k < 1 || k > d.semisimple_rank()) throw InputError("omega" + std::to_string(k) + ": no such simple root");
  for (int c = 0; c < d.rank(); ++c) {
    Weight e = d.zero();
    e[static_cast<std::size_t>(c)] = 1;
    bool ok = true;
    for (int j = 0; j < d.semisimple_rank() && ok; ++j) ok = d.pairing(e, j) == (j == k - 1 ? 1 : 0);
    if (ok) return e;
  }
  throw InputError("omega" + std::to_string(k) + " is not a basis vector of X(T) for " + d.name() +
                   "; give the weight in coordinates");
}

namespace {

bool is_keyword(const std::string& tok) { return tok == "T" || tok == "theta" || tok == "Cprime" || tok == "chi"; }

struct Value {
  bool is_scalar = false;
  LaurentPoly scalar;
  std::optional<HeckeElt> elt;
  std::optional<HeckeElt> preimage;
};

class Parser {
 public:
  Parser(const std::string& text, const DoubleCosetModule& mod) : s_(text), mod_(mod), H_(mod.algebra()) {}

  ExprValue run() {
    Value v = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_) + "'");
    if (v.is_scalar) return {H_.scalar(v.scalar), std::nullopt};
    return {*v.elt, v.preimage};
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("cannot parse expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool at_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    return end == s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_');
  }
  /// A maximal run of characters other than whitespace and operators.
  std::string token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '*' &&
           s_[pos_] != '+' && s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    return s_.substr(start, pos_ - start);
  }
  /// Generator tokens up to the next operator or keyword.
  std::string word() {
    std::string out;
    for (;;) {
      skip_ws();
      const std::size_t save = pos_;
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (!(c == 's' || c == 'g' || c == 't' || c == '1')) break;
      std::string tok = token();
      if (tok.empty() || is_keyword(tok)) {
        pos_ = save;
        break;
      }
      out += (out.empty() ? "" : " ") + tok;
    }
    if (out.empty()) fail("expected a word over the generators");
    return out;
  }

  Weight weight(const std::string& text) {
    const RootDatum& d = H_.datum();
    if (text.rfind("omega", 0) == 0) {
      const std::string k = text.substr(5);
      if (k.empty()) {
        if (d.semisimple_rank() != 1) fail("'omega' needs an index in rank > 1");
        return fundamental_weight(d, 1);
      }
      try {
        return fundamental_weight(d, std::stoi(k));
      } catch (const std::invalid_argument&) {
        fail("bad weight '" + text + "'");
      }
    }
    std::vector<int> v;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(part, &used));
        if (used != part.size()) fail("bad weight '" + text + "'");
      } catch (const std::logic_error&) {
        fail("bad weight '" + text + "'");
      }
    }
    if (v.size() == 1 && v[0] == 0) return d.zero();
    if (static_cast<int>(v.size()) != d.rank())
      fail("weight '" + text + "' has " + std::to_string(v.size()) + " coordinates, expected " +
           std::to_string(d.rank()));
    return Weight(v);
  }

  ExtAffElt min_rep(const std::string& inner) {
    std::string wpart, zpart;
    if (auto semi = inner.find(';'); semi != std::string::npos) {
      wpart = inner.substr(0, semi);
      zpart = inner.substr(semi + 1);
    } else if (auto comma = inner.rfind(','); comma != std::string::npos) {
      wpart = inner.substr(0, comma);
      zpart = inner.substr(comma + 1);
    } else {
      fail("m(...) needs a weight and a finite Weyl element");
    }
    auto trim = [](std::string t) {
      t.erase(0, t.find_first_not_of(" \t"));
      t.erase(t.find_last_not_of(" \t") + 1);
      return t;
    };
    const CosetIndex idx{weight(trim(wpart)), H_.finite().parse(trim(zpart))};
    mod_.validate(idx);
    return mod_.m(idx);
  }

  Value of(HeckeElt h) {
    Value v;
    v.elt = std::move(h);
    return v;
  }

  Value sum() {
    Value acc = product();
    for (;;) {
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Value rhs = product();
      if (c == '-') rhs = negate(std::move(rhs));
      acc = add(std::move(acc), std::move(rhs));
    }
  }

  Value negate(Value v) {
    if (v.is_scalar) {
      v.scalar = -v.scalar;
      return v;
    }
    *v.elt *= LaurentPoly(-1);
    if (v.preimage) *v.preimage *= LaurentPoly(-1);
    return v;
  }

  Value add(Value a, Value b) {
    if (a.is_scalar && b.is_scalar) {
      a.scalar += b.scalar;
      return a;
    }
    if (a.is_scalar) a = of(H_.scalar(a.scalar));
    if (b.is_scalar) b = of(H_.scalar(b.scalar));
    Value out = of(*a.elt + *b.elt);
    if (a.preimage && b.preimage) out.preimage = *a.preimage + *b.preimage;
    return out;
  }

  Value product() {
    Value acc = factor();
    while (peek() == '*') {
      ++pos_;
      Value rhs = factor();
      if (acc.is_scalar && rhs.is_scalar) {
        acc.scalar *= rhs.scalar;
      } else if (acc.is_scalar || rhs.is_scalar) {
        const LaurentPoly c = acc.is_scalar ? acc.scalar : rhs.scalar;
        Value e = acc.is_scalar ? std::move(rhs) : std::move(acc);
        *e.elt *= c;
        if (e.preimage) *e.preimage *= c;
        acc = std::move(e);
      } else {
        acc = of(*acc.elt * *rhs.elt);
      }
    }
    return acc;
  }

  std::string parenthesized() {
    if (peek() != '(') fail("expected '('");
    int depth = 0;
    const std::size_t start = pos_ + 1;
    for (; pos_ < s_.size(); ++pos_) {
      if (s_[pos_] == '(') ++depth;
      if (s_[pos_] == ')' && --depth == 0) {
        ++pos_;
        return s_.substr(start, pos_ - 1 - start);
      }
    }
    fail("unbalanced parentheses");
  }

  Value sub_expression(const std::string& inner) {
    Parser p(inner, mod_);
    Value v = p.sum();
    p.skip_ws();
    if (p.pos_ != inner.size()) p.fail("unexpected '" + inner.substr(p.pos_) + "'");
    return v;
  }

  Value factor() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of expression");
    if (c == '(') {
      const std::string inner = parenthesized();
      try {
        Value v;
        v.is_scalar = true;
        v.scalar = LaurentPoly::parse(inner);
        return v;
      } catch (const InputError&) {
        return sub_expression(inner);
      }
    }
    if (c == '-') {
      ++pos_;
      return negate(factor());
    }
    if (at_word("chi")) {
      pos_ += 3;
      Value inner = peek() == '(' ? sub_expression(parenthesized()) : factor();
      const HeckeElt h = inner.is_scalar ? H_.scalar(inner.scalar) : *inner.elt;
      Value out = of(mod_.chi(h).carrier);
      out.preimage = h;
      return out;
    }
    if (at_word("theta")) {
      pos_ += 5;
      return of(H_.theta(weight(token())));
    }
    if (at_word("Cprime")) {
      pos_ += 6;
      skip_ws();
      if (s_.compare(pos_, 2, "m(") == 0) {
        ++pos_;
        return of(mod_.kl().c_prime(min_rep(parenthesized())));
      }
      return of(mod_.kl().c_prime(H_.group().parse(word())));
    }
    if (at_word("T")) {
      pos_ += 1;
      return of(H_.T(word()));
    }
    const std::string tok = token();
    if (tok.empty()) fail("expected a factor");
    Value v;
    v.is_scalar = true;
    v.scalar = LaurentPoly::parse(tok);
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
  const DoubleCosetModule& mod_;
  const HeckeAlgebra& H_;
};

}  // namespace

ExprValue evaluate_expression(const std::string& text, const DoubleCosetModule& mod) {
  return Parser(text, mod).run();
}

}  // namespace hecke
