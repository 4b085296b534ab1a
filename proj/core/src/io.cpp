#include "scrollsys/io.hpp"

#include <cctype>
#include <sstream>

namespace scrollsys {

namespace {

void append_mults(std::ostream& os, const std::vector<Int>& sorted_desc) {
  std::size_t i = 0;
  while (i < sorted_desc.size()) {
    std::size_t j = i;
    while (j < sorted_desc.size() && sorted_desc[j] == sorted_desc[i]) ++j;
    os << ',' << sorted_desc[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  BlowupClass parse() {
    expect('L');
    Int n = integer("scroll index");
    if (n < 0) fail("scroll index must be >= 0");
    expect('(');
    Int a = integer("coefficient a");
    expect(',');
    Int b = integer("coefficient b");
    std::vector<Int> mults;
    while (peek() == ',') {
      ++pos_;
      Int m = integer("multiplicity");
      Int count = 1;
      if (peek() == '^') {
        ++pos_;
        count = integer("exponent");
        if (count < 0) fail("exponent must be >= 0");
      }
      for (Int k = 0; k < count; ++k) mults.push_back(m);
    }
    expect(')');
    if (pos_ != text_.size()) fail("trailing characters after ')'");
    return make_class(n, a, b, std::move(mults));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(pos_, msg); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Int integer(const char* what) {
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(std::string("expected ") + what);
    Int value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = checked_add(checked_mul(value, 10), text_[pos_] - '0');
      ++pos_;
    }
    (void)start;
    return neg ? -value : value;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const BlowupClass& c) {
  BlowupClass canon = c.canonical();
  std::ostringstream os;
  os << 'L' << canon.n() << '(' << canon.a() << ',' << canon.b();
  append_mults(os, canon.mults);
  os << ')';
  return os.str();
}

std::string to_string(const SystemSpec& s) { return to_string(s.cls); }

BlowupClass parse_class(const std::string& text) { return Parser(text).parse(); }

SystemSpec parse_system(const std::string& text) {
  BlowupClass c = parse_class(text);
  for (Int m : c.mults)
    if (m < 0) throw parse_error(0, "system multiplicities must be >= 0");
  return make_system(std::move(c));
}

}  // namespace scrollsys
