#include <parpole/rational.hpp>

#include <stdexcept>

namespace parpole {

std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = s.find('/');
  try {
    std::size_t used = 0;
    long long num = std::stoll(s.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? s.size() : slash))
      throw std::invalid_argument("trailing junk");
    if (slash == std::string::npos) return Rat(num);
    long long den = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1) throw std::invalid_argument("trailing junk");
    return Rat(num, den);
  } catch (const boost::bad_rational&) {
    throw std::invalid_argument("bad rational: " + s);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational: " + s);
  }
}

std::size_t RatHash::operator()(const Rat& r) const noexcept {
  auto mix = [](std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
  };
  return mix(static_cast<std::uint64_t>(r.numerator()) * 0x9e3779b97f4a7c15ULL ^
             static_cast<std::uint64_t>(r.denominator()));
}

} // namespace parpole
