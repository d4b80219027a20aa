#include "hopfgraph/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hopfgraph {

namespace {

const std::set<std::string, std::less<>> kReservedNames = {"j", "phi"};

Polynomial::Monomial multiply(const Polynomial::Monomial& a, const Polynomial::Monomial& b) {
  std::map<std::string, unsigned> merged(a.begin(), a.end());
  for (const auto& [name, e] : b) merged[name] += e;
  return {merged.begin(), merged.end()};
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.terms_.emplace(Monomial{{name, 1}}, 1);
  return p;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<unsigned> Polynomial::order() const {
  std::optional<unsigned> best;
  for (const auto& [m, c] : terms_) {
    unsigned d = 0;
    for (const auto& [name, e] : m) d += e;
    if (!best || d < *best) best = d;
  }
  return best;
}

std::vector<std::string> Polynomial::variable_names() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_) {
    for (const auto& [name, e] : m) names.insert(name);
  }
  return {names.begin(), names.end()};
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  Polynomial product;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Polynomial term;
      term.terms_.emplace(multiply(ma, mb), ca * cb);
      product += term;
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out(1);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

Series Polynomial::to_series(const VariablesPtr& vars) const {
  Series out(vars);
  for (const auto& [m, c] : terms_) {
    Series term = Series::constant(vars, c);
    for (const auto& [name, e] : m) term *= Series::variable(vars, name).pow(e);
    out += term;
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (!first) out << (c < 0 ? " - " : " + ");
    if (first && c < 0) out << '-';
    first = false;
    bool need_star = false;
    if (magnitude != 1 || m.empty()) {
      out << hopfgraph::to_string(magnitude);
      need_star = true;
    }
    for (const auto& [name, e] : m) {
      if (need_star) out << '*';
      out << name;
      if (e != 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a += -b; }
Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ModelError("expression '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p += -term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        auto divisor = unary().as_constant();
        if (!divisor) fail("division by a non-constant");
        if (*divisor == 0) fail("division by zero");
        p *= Polynomial(Rational(1) / *divisor);
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("missing ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal numbers are not supported");
      return Polynomial(Rational(BigInt(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return ExpressionParser(text).parse(); }

const Polynomial& FieldModel::propagator(int species_id) const {
  if (species_id < 1 || species_id > static_cast<int>(propagators.size())) {
    throw ModelError("species " + std::to_string(species_id) + " has no propagator");
  }
  return propagators[static_cast<std::size_t>(species_id - 1)];
}

Polynomial FieldModel::coupling(const Profile& profile) const {
  auto it = couplings.find(profile);
  if (it != couplings.end()) return it->second;
  if (undeclared == UndeclaredCoupling::error) {
    std::string text;
    for (int s : profile) text += (text.empty() ? "" : " ") + std::to_string(s);
    throw ModelError("no coupling declared for vertex profile [" + text + "]");
  }
  return {};
}

std::vector<std::string> FieldModel::variable_names() const {
  std::set<std::string> names;
  for (const auto& p : propagators) {
    for (auto& n : p.variable_names()) names.insert(n);
  }
  for (const auto& [profile, c] : couplings) {
    for (auto& n : c.variable_names()) names.insert(n);
  }
  return {names.begin(), names.end()};
}

VariablesPtr FieldModel::ring(int default_order) const {
  std::vector<std::pair<std::string, int>> vars;
  for (const auto& name : variable_names()) {
    auto it = orders.find(name);
    vars.emplace_back(name, it == orders.end() ? default_order : it->second);
  }
  return make_variables(std::move(vars));
}

std::vector<int> FieldModel::coupling_degrees() const {
  std::set<int> degrees;
  for (const auto& [profile, c] : couplings) {
    if (!c.is_zero()) degrees.insert(static_cast<int>(profile.size()));
  }
  return {degrees.begin(), degrees.end()};
}

void FieldModel::validate() const {
  if (species < 1 || species > 255) throw ModelError("species count must lie in 1..255");
  if (static_cast<int>(propagators.size()) != species) {
    throw ModelError("one propagator per species is required");
  }
  for (int s = 1; s <= species; ++s) {
    if (propagator(s).constant_term() == 0) {
      throw ModelError("propagator of species " + std::to_string(s) + " must have a nonzero constant term");
    }
  }
  for (const auto& [profile, c] : couplings) {
    if (profile.empty()) throw ModelError("a vertex needs at least one attachment");
    if (!std::is_sorted(profile.begin(), profile.end())) throw ModelError("profile must be sorted");
    for (int s : profile) {
      if (s < 1 || s > species) throw ModelError("vertex species " + std::to_string(s) + " out of range");
    }
  }
  for (const auto& name : variable_names()) {
    if (kReservedNames.count(name)) throw ModelError("variable name '" + name + "' is reserved");
  }
  for (const auto& [name, order] : orders) {
    if (order < 0) throw ModelError("order of '" + name + "' must be non-negative");
  }
}

FieldModel monomial_model(const std::map<int, Polynomial>& couplings_by_degree, const Rational& propagator) {
  FieldModel model;
  model.propagators = {Polynomial(propagator)};
  for (const auto& [degree, value] : couplings_by_degree) {
    model.couplings[Profile(static_cast<std::size_t>(degree), 1)] = value;
  }
  model.validate();
  return model;
}

namespace {

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

int parse_int(const std::string& word, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size() || word.empty()) throw ModelError(what + " must be an integer, got '" + word + "'");
  return value;
}

template <class Enum>
Enum parse_choice(const std::vector<std::string>& words, const std::vector<std::pair<std::string, Enum>>& choices) {
  if (words.size() == 2) {
    for (const auto& [name, value] : choices) {
      if (words[1] == name) return value;
    }
  }
  std::string allowed;
  for (const auto& [name, value] : choices) allowed += (allowed.empty() ? "" : "|") + name;
  throw ModelError("'" + words[0] + "' expects one of " + allowed);
}

}  // namespace

FieldModel parse_model(std::string_view text) {
  FieldModel model;
  std::map<int, Polynomial> propagators;
  std::set<std::string> seen_flags;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::string lhs = line;
      std::string rhs;
      bool has_value = false;
      if (auto eq = line.find('='); eq != std::string::npos) {
        lhs = line.substr(0, eq);
        rhs = line.substr(eq + 1);
        has_value = true;
      }
      auto words = split_words(lhs);
      if (words.empty()) {
        if (has_value) throw ModelError("missing keyword");
        continue;
      }
      const std::string& key = words[0];
      auto once = [&] {
        if (!seen_flags.insert(key).second) throw ModelError("'" + key + "' declared twice");
      };
      auto no_value = [&] {
        if (has_value) throw ModelError("'" + key + "' takes no '='");
      };
      if (key == "species") {
        no_value();
        once();
        if (words.size() != 2) throw ModelError("usage: species M");
        model.species = parse_int(words[1], "species count");
        if (model.species < 1 || model.species > 255) throw ModelError("species count must lie in 1..255");
      } else if (key == "propagator") {
        if (!has_value || words.size() != 2) throw ModelError("usage: propagator S = EXPR");
        int s = parse_int(words[1], "species");
        if (!propagators.emplace(s, parse_polynomial(rhs)).second) {
          throw ModelError("propagator of species " + words[1] + " declared twice");
        }
      } else if (key == "coupling" || key == "vertex") {
        if (!has_value || words.size() < 2) {
          throw ModelError(key == "coupling" ? "usage: coupling DEGREE = EXPR" : "usage: vertex S1 S2 ... = EXPR");
        }
        Profile profile;
        if (key == "coupling") {
          if (words.size() != 2) throw ModelError("usage: coupling DEGREE = EXPR");
          int degree = parse_int(words[1], "degree");
          if (degree < 1 || degree > 64) throw ModelError("degree must lie in 1..64");
          profile.assign(static_cast<std::size_t>(degree), 1);
        } else {
          for (std::size_t i = 1; i < words.size(); ++i) profile.push_back(parse_int(words[i], "species"));
          std::sort(profile.begin(), profile.end());
        }
        if (!model.couplings.emplace(profile, parse_polynomial(rhs)).second) {
          throw ModelError("coupling for this vertex declared twice");
        }
      } else if (key == "order") {
        no_value();
        if (words.size() != 3) throw ModelError("usage: order VARIABLE K");
        if (!model.orders.emplace(words[1], parse_int(words[2], "order")).second) {
          throw ModelError("order of '" + words[1] + "' declared twice");
        }
      } else if (key == "legs") {
        no_value();
        once();
        model.legs = parse_choice<LegConvention>(
            words, {{"unamputated", LegConvention::unamputated}, {"amputated", LegConvention::amputated}});
      } else if (key == "convention") {
        no_value();
        once();
        model.convention = parse_choice<VertexConvention>(
            words, {{"bare", VertexConvention::bare}, {"dressed", VertexConvention::dressed}});
      } else if (key == "undeclared") {
        no_value();
        once();
        model.undeclared = parse_choice<UndeclaredCoupling>(
            words, {{"zero", UndeclaredCoupling::zero}, {"error", UndeclaredCoupling::error}});
      } else if (key == "one_point") {
        no_value();
        once();
        model.one_point = parse_choice<OnePoint>(words, {{"keep", OnePoint::keep}, {"vanish", OnePoint::vanish}});
      } else {
        throw ModelError("unknown keyword '" + key + "'");
      }
    }
    model.propagators.assign(static_cast<std::size_t>(model.species), Polynomial(1));
    for (const auto& [s, p] : propagators) {
      if (s < 1 || s > model.species) throw ModelError("propagator species " + std::to_string(s) + " out of range");
      model.propagators[static_cast<std::size_t>(s - 1)] = p;
    }
    line_no = 0;
    model.validate();
  } catch (const ModelError& e) {
    if (line_no == 0) throw;
    throw ModelError("line " + std::to_string(line_no) + ": " + e.what());
  }
  return model;
}

FieldModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot read model file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_model(text.str());
  } catch (const ModelError& e) {
    throw ModelError(path + ": " + e.what());
  }
}

std::string format_model(const FieldModel& model) {
  std::ostringstream out;
  out << "species " << model.species << '\n';
  for (int s = 1; s <= model.species; ++s) {
    out << "propagator " << s << " = " << model.propagator(s).to_string() << '\n';
  }
  for (const auto& [profile, c] : model.couplings) {
    out << "vertex";
    for (int s : profile) out << ' ' << s;
    out << " = " << c.to_string() << '\n';
  }
  for (const auto& [name, order] : model.orders) out << "order " << name << ' ' << order << '\n';
  out << "legs " << (model.legs == LegConvention::unamputated ? "unamputated" : "amputated") << '\n';
  out << "convention " << (model.convention == VertexConvention::bare ? "bare" : "dressed") << '\n';
  out << "undeclared " << (model.undeclared == UndeclaredCoupling::zero ? "zero" : "error") << '\n';
  out << "one_point " << (model.one_point == OnePoint::keep ? "keep" : "vanish") << '\n';
  return out.str();
}

}  // namespace hopfgraph
