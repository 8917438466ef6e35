#include "cmfield/fieldspec.hpp"

#include <charconv>

#include "cmfield/errors.hpp"

namespace cmfield {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FieldSpec spec() {
    std::vector<FieldSpec> atoms{atom()};
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      atoms.push_back(atom());
    }
    if (pos_ != text_.size()) throw ParseError(pos_, "'*' or end of input");
    if (atoms.size() == 1) return std::move(atoms.front());
    FieldSpec s;
    s.kind = FieldSpec::Kind::compositum;
    s.parts = std::move(atoms);
    return s;
  }

 private:
  bool eat(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    const std::size_t digits = end;
    while (end < text_.size() && text_[end] >= '0' && text_[end] <= '9') ++end;
    if (end == digits) throw ParseError(start, "integer");
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + end, v);
    if (ec != std::errc()) throw ParseError(start, "integer in 64-bit range");
    pos_ = end;
    return v;
  }

  FieldSpec atom() {
    const std::size_t start = pos_;
    FieldSpec s;
    if (eat("zeta:")) {
      const std::size_t at = pos_;
      s.kind = FieldSpec::Kind::zeta;
      s.n = integer();
      if (s.n < 1) throw ParseError(at, "positive integer");
    } else if (eat("quad:")) {
      const std::size_t at = pos_;
      s.kind = FieldSpec::Kind::quad;
      s.n = integer();
      if (!is_fundamental_discriminant(s.n)) throw ParseError(at, "fundamental discriminant");
    } else if (eat("chars:")) {
      s.kind = FieldSpec::Kind::chars;
      while (true) {
        const std::size_t at = pos_;
        std::size_t end = text_.find_first_of("+*", pos_);
        if (end == std::string_view::npos) end = text_.size();
        try {
          s.chars.push_back(decode_character(text_.substr(at, end - at)));
        } catch (const ParseError& e) {
          throw ParseError(at + e.offset(), e.expected());
        }
        pos_ = end;
        if (!eat("+")) break;
      }
    } else {
      throw ParseError(start, "'zeta:', 'quad:' or 'chars:'");
    }
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldSpec parse_field_spec(std::string_view text) { return Parser(text).spec(); }

std::string to_string(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldSpec::Kind::zeta: return "zeta:" + std::to_string(spec.n);
    case FieldSpec::Kind::quad: return "quad:" + std::to_string(spec.n);
    case FieldSpec::Kind::chars: {
      std::string s = "chars:";
      for (std::size_t i = 0; i < spec.chars.size(); ++i) s += (i ? "+" : "") + encode(spec.chars[i]);
      return s;
    }
    case FieldSpec::Kind::compositum: {
      std::string s;
      for (std::size_t i = 0; i < spec.parts.size(); ++i) s += (i ? "*" : "") + to_string(spec.parts[i]);
      return s;
    }
  }
  return {};
}

AbelianField build_field(const FieldSpec& spec, std::size_t max_degree) {
  switch (spec.kind) {
    case FieldSpec::Kind::zeta: return cyclotomic_field(spec.n, max_degree);
    case FieldSpec::Kind::quad: return quadratic_field(spec.n);
    case FieldSpec::Kind::chars: return field_from_generators(spec.chars, max_degree);
    case FieldSpec::Kind::compositum: {
      AbelianField k = build_field(spec.parts.front(), max_degree);
      for (std::size_t i = 1; i < spec.parts.size(); ++i) k = compositum(k, build_field(spec.parts[i], max_degree), max_degree);
      return k;
    }
  }
  throw InternalInconsistency("unknown field spec kind");
}

std::string spec_of(const AbelianField& k) {
  if (k.degree() == 2) return "quad:" + std::to_string(quadratic_discriminant(k));
  if (k.conductor() > 1 && static_cast<std::int64_t>(k.degree()) == euler_phi(k.conductor()))
    return "zeta:" + std::to_string(k.conductor());
  FieldSpec s;
  s.kind = FieldSpec::Kind::chars;
  s.chars = generators_of(k);
  if (s.chars.empty()) return "zeta:1";
  return to_string(s);
}

}  // namespace cmfield
