#include "ivmc/bigint.hpp"

#include <cctype>
#include <limits>
#include <ostream>

namespace ivmc {

std::string Big::str() const {
  if (v_ == 0) return "0";
  // Magnitude via unsigned to survive the most negative value.
  unsigned __int128 mag =
      v_ < 0 ? static_cast<unsigned __int128>(-(v_ + 1)) + 1 : static_cast<unsigned __int128>(v_);
  char buf[64];
  int pos = 64;
  while (mag != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
    mag /= 10;
  }
  std::string out;
  if (v_ < 0) out.push_back('-');
  out.append(buf + pos, 64 - pos);
  return out;
}

Big Big::parse(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) throw Error("Big: empty numeric literal '" + text + "'");
  Big acc;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error("Big: invalid digit in '" + text + "'");
    acc = acc * Big(10) + Big(text[i] - '0');
  }
  return neg ? -acc : acc;
}

std::int64_t Big::as_i64() const {
  if (!fits_i64()) throw Error("Big: value " + str() + " does not fit in 64 bits");
  return static_cast<std::int64_t>(v_);
}

bool Big::fits_i64() const {
  return v_ >= std::numeric_limits<std::int64_t>::min() &&
         v_ <= std::numeric_limits<std::int64_t>::max();
}

std::ostream& operator<<(std::ostream& os, const Big& b) { return os << b.str(); }

}  // namespace ivmc
