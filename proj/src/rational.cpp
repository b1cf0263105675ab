#include "pathgames/rational.hpp"

#include <cctype>

namespace pathgames {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

ExtRational ExtRational::parse(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  auto bad = [&] {
    return std::invalid_argument("malformed rational: '" + text + "'");
  };
  Rat q;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    mpz_class d(den);
    if (d == 0) throw bad();
    q = Rat(mpz_class(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) throw bad();
    mpz_class scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    q = Rat(mpz_class(whole) * scale + mpz_class(frac), scale);
  } else {
    if (!all_digits(s)) throw bad();
    q = Rat(mpz_class(s));
  }
  q.canonicalize();
  if (neg) q = -q;
  return ExtRational(q);
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ExtRational::str() const {
  if (inf_) return "inf";
  return rat_str(q_);
}

}  // namespace pathgames
