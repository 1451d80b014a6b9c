#include "braidfgl/fgl/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>

#include "braidfgl/error.hpp"

namespace braidfgl::fgl {

namespace {

struct ParameterTable {
  std::mutex mutex;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> ids;
};

ParameterTable& parameters() {
  static ParameterTable table;
  return table;
}

constexpr int kMaxGenerator = (1 << 20) - 8;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c)) != 0;
         });
}

}  // namespace

Variable Variable::generator(int k) {
  if (k < 1 || k > kMaxGenerator) throw DomainError("generator index out of range");
  return Variable(kGeneratorBase + static_cast<std::uint32_t>(k - 1));
}

Variable Variable::named(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    throw ParseError("bad variable name '" + std::string(name) + "'");
  }
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
      throw ParseError("bad variable name '" + std::string(name) + "'");
    }
  }
  if (name == "x") return x();
  if (name == "y") return y();
  if (name == "z") return z();
  if (name == "t") return t();
  if ((name[0] == 'a' || name[0] == 'v') && all_digits(name.substr(1))) {
    auto digits = name.substr(1);
    if (digits.size() > 6 || digits[0] == '0') {
      throw ParseError("bad generator name '" + std::string(name) + "'");
    }
    return generator(std::stoi(std::string(digits)));
  }
  auto& table = parameters();
  std::lock_guard lock(table.mutex);
  std::string key(name);
  auto it = table.ids.find(key);
  if (it != table.ids.end()) return Variable(it->second);
  auto id = kParameterBase + static_cast<std::uint32_t>(table.names.size());
  table.names.push_back(key);
  table.ids.emplace(key, id);
  return Variable(id);
}

std::string Variable::name() const {
  switch (id_) {
    case 0: return "x";
    case 1: return "y";
    case 2: return "z";
    case 3: return "t";
    default: break;
  }
  if (is_generator()) return "a" + std::to_string(generator_index());
  auto& table = parameters();
  std::lock_guard lock(table.mutex);
  return table.names.at(id_ - kParameterBase);
}

bool Variable::canonical_less(Variable a, Variable b) {
  if (a.is_parameter() && b.is_parameter()) return a.name() < b.name();
  return a.id_ < b.id_;
}

// ---- Monomial ----

Monomial Monomial::of(Variable v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.powers_.emplace_back(v, exponent);
  return m;
}

Monomial Monomial::of(std::initializer_list<std::pair<Variable, unsigned>> powers) {
  Monomial m;
  for (auto [v, e] : powers) m = m * of(v, e);
  return m;
}

unsigned Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), v,
                             [](const auto& p, Variable w) { return p.first < w; });
  return it != powers_.end() && it->first == v ? it->second : 0;
}

int Monomial::formal_degree() const {
  int d = 0;
  for (auto& [v, e] : powers_) {
    if (!v.is_formal()) break;
    d += static_cast<int>(e);
  }
  return d;
}

int Monomial::weight() const {
  int w = 0;
  for (auto& [v, e] : powers_) w += v.weight() * static_cast<int>(e);
  return w;
}

std::pair<Monomial, Monomial> Monomial::split_formal() const {
  Monomial f, c;
  for (auto& p : powers_) (p.first.is_formal() ? f : c).powers_.push_back(p);
  return {f, c};
}

Monomial Monomial::without(Variable v) const {
  Monomial m;
  for (auto& p : powers_) {
    if (p.first != v) m.powers_.push_back(p);
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.powers_.reserve(a.powers_.size() + b.powers_.size());
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
      m.powers_.push_back(*i++);
    } else if (i == a.powers_.end() || j->first < i->first) {
      m.powers_.push_back(*j++);
    } else {
      m.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

// ---- Polynomial ----

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(Variable v) { terms_.emplace(Monomial::of(v), Rational(1)); }

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, c);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::formal_degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.formal_degree());
  return d;
}

int Polynomial::formal_order() const {
  int d = -1;
  for (auto& [m, c] : terms_) {
    int k = m.formal_degree();
    if (d < 0 || k < d) d = k;
  }
  return d;
}

Polynomial Polynomial::truncated(int max_degree) const {
  Polynomial r;
  for (auto& [m, c] : terms_) {
    if (m.formal_degree() <= max_degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r;
  for (auto& [m, c] : terms_) {
    if (m.formal_degree() == degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Polynomial Polynomial::coefficient_of(const Monomial& formal) const {
  Polynomial r;
  for (auto& [m, c] : terms_) {
    auto [f, rest] = m.split_formal();
    if (f == formal) r.add_term(rest, c);
  }
  return r;
}

std::map<Monomial, Polynomial> Polynomial::by_formal_part() const {
  std::map<Monomial, Polynomial> out;
  for (auto& [m, c] : terms_) {
    auto [f, rest] = m.split_formal();
    out[f].add_term(rest, c);
  }
  return out;
}

std::map<Monomial, Polynomial> Polynomial::by_coefficient_part() const {
  std::map<Monomial, Polynomial> out;
  for (auto& [m, c] : terms_) {
    auto [f, rest] = m.split_formal();
    out[rest].add_term(f, c);
  }
  return out;
}

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return braidfgl::is_integral(t.second); });
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> vs;
  for (auto& [m, c] : terms_) {
    for (auto& [v, e] : m.powers()) vs.insert(v);
  }
  return vs;
}

int Polynomial::max_generator() const {
  int k = 0;
  for (auto v : variables()) k = std::max(k, v.generator_index());
  return k;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply_truncated(a, b, -1); }

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<std::pair<int, const std::pair<const Monomial, Rational>*>> bs;
  bs.reserve(b.terms().size());
  for (auto& t : b.terms()) bs.emplace_back(t.first.formal_degree(), &t);
  Rational prod;
  for (auto& [ma, ca] : a.terms()) {
    int da = ma.formal_degree();
    if (max_degree >= 0 && da > max_degree) continue;
    for (auto& [db, tb] : bs) {
      if (max_degree >= 0 && da + db > max_degree) continue;
      prod = ca * tb->second;
      r.add_term(ma * tb->first, prod);
    }
  }
  return r;
}

Polynomial power_truncated(const Polynomial& p, unsigned e, int max_degree) {
  Polynomial result(1);
  Polynomial base = max_degree >= 0 ? p.truncated(max_degree) : p;
  while (e > 0) {
    if (e & 1u) result = multiply_truncated(result, base, max_degree);
    e >>= 1u;
    if (e > 0) base = multiply_truncated(base, base, max_degree);
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<Variable, Polynomial>& images,
                      int max_degree) {
  // Powers of each image, computed on demand.
  std::map<Variable, std::vector<Polynomial>> powers;
  auto power_of = [&](Variable v, unsigned e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1);
    while (cache.size() <= e) {
      cache.push_back(multiply_truncated(cache.back(), images.at(v), max_degree));
    }
    return cache[e];
  };

  Polynomial result;
  for (auto& [m, c] : p.terms()) {
    Monomial kept;
    std::vector<std::pair<Variable, unsigned>> replaced;
    for (auto& [v, e] : m.powers()) {
      if (images.count(v) != 0) {
        replaced.emplace_back(v, e);
      } else {
        kept = kept * Monomial::of(v, e);
      }
    }
    if (max_degree >= 0 && kept.formal_degree() > max_degree) continue;
    Polynomial term(kept, c);
    for (auto [v, e] : replaced) {
      term = multiply_truncated(term, power_of(v, e), max_degree);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return result;
}

// ---- text ----

namespace {

std::vector<std::pair<Variable, unsigned>> canonical_powers(const Monomial& m) {
  auto v = m.powers();
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return Variable::canonical_less(a.first, b.first); });
  return v;
}

// Lexicographic with x > y > ...: at the first differing variable the larger
// exponent wins.
bool lex_before(const std::vector<std::pair<Variable, unsigned>>& a,
                const std::vector<std::pair<Variable, unsigned>>& b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return Variable::canonical_less(a[i].first, b[i].first);
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return i < a.size() && i == b.size();
}

// Coefficient variables first, then x, y, z, t: "a1*x*y".
std::string monomial_text(const Monomial& m) {
  auto [formal, coef] = m.split_formal();
  std::string out;
  auto powers = canonical_powers(coef);
  for (auto& p : canonical_powers(formal)) powers.push_back(p);
  for (auto& [v, e] : powers) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::vector<std::pair<Monomial, Rational>> canonical_terms(const Polynomial& p) {
  struct Entry {
    int degree;
    int total;
    std::vector<std::pair<Variable, unsigned>> key;
    const Monomial* mono;
    const Rational* coef;
  };
  std::vector<Entry> entries;
  entries.reserve(p.terms().size());
  for (auto& [m, c] : p.terms()) {
    int total = 0;
    for (auto& [v, e] : m.powers()) total += static_cast<int>(e);
    entries.push_back({m.formal_degree(), total, canonical_powers(m), &m, &c});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.total != b.total) return a.total < b.total;
    return lex_before(a.key, b.key);
  });
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.emplace_back(*e.mono, *e.coef);
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : canonical_terms(p)) {
    bool negative = c < 0;
    Rational mag = abs_value(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += braidfgl::to_string(mag);
    } else if (mag == 1) {
      out += monomial_text(m);
    } else {
      out += braidfgl::to_string(mag) + "*" + monomial_text(m);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    auto p = expression();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  Polynomial expression() {
    Polynomial acc;
    if (accept('-')) {
      acc -= term();
    } else {
      accept('+');
      acc += term();
    }
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    auto acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    auto base = primary();
    if (accept('^')) {
      skip_space();
      auto start = pos_;
      while (at_digit()) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 3) fail("exponent too large");
      auto e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      base = power_truncated(base, e, -1);
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto start = pos_;
      while (at_digit()) ++pos_;
      // p/q is one literal when q follows the slash directly.
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (at_digit()) ++pos_;
      }
      return Polynomial(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      return Polynomial(Variable::named(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace braidfgl::fgl
