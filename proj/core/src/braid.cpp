#include "veerlab/braid.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

#include "veerlab/errors.hpp"
#include "veerlab/modular.hpp"

namespace veerlab {

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 2) throw InputError("braid needs at least 2 strands, got " + std::to_string(strands_));
  for (int l : letters_)
    if (l == 0 || std::abs(l) > strands_ - 1)
      throw InputError("letter " + std::to_string(l) + " is not a generator of B_" + std::to_string(strands_));
}

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 2) throw InputError("strand count must be at least 2, got " + std::to_string(strands));
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    int v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      throw InputError("invalid braid token '" + tok + "'");
    if (v == 0) throw InputError("invalid braid token '" + tok + "': generator index 0");
    if (std::abs(v) > strands - 1)
      throw InputError("invalid braid token '" + tok + "': index out of range for " + std::to_string(strands) +
                       " strands");
    letters.push_back(v);
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& b) {
  std::string s;
  for (std::size_t i = 0; i < b.length(); ++i) {
    if (i) s += ' ';
    s += std::to_string(b.letters()[i]);
  }
  return s;
}

long linking_number(const BraidWord& b) {
  long lk = 0;
  for (int l : b.letters()) lk += l > 0 ? 1 : -1;
  return lk;
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<int> out;
  for (int l : b.letters()) {
    if (!out.empty() && out.back() == -l) out.pop_back();
    else out.push_back(l);
  }
  return BraidWord(b.strands(), std::move(out));
}

BraidWord invert(const BraidWord& b) {
  std::vector<int> out(b.letters().rbegin(), b.letters().rend());
  for (int& l : out) l = -l;
  return BraidWord(b.strands(), std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw InputError("strand mismatch: " + std::to_string(a.strands()) + " vs " + std::to_string(b.strands()));
  std::vector<int> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(out));
}

BraidWord concat(const std::vector<BraidWord>& parts) {
  if (parts.empty()) throw InputError("concat of no words");
  BraidWord acc(parts.front().strands());
  for (const auto& p : parts) acc = concat(acc, p);
  return acc;
}

BraidWord power(const BraidWord& b, long k) {
  const BraidWord base = k < 0 ? invert(b) : b;
  std::vector<int> out;
  for (long i = 0; i < std::labs(k); ++i) out.insert(out.end(), base.letters().begin(), base.letters().end());
  return BraidWord(b.strands(), std::move(out));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& g) { return concat(concat(g, b), invert(g)); }

BraidWord stabilize(const BraidWord& b) { return BraidWord(b.strands() + 1, b.letters()); }

bool is_positive(const BraidWord& b) {
  for (int l : b.letters())
    if (l < 0) return false;
  return true;
}

bool braid3_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != 3 || b.strands() != 3) throw InputError("braid3_equal requires words in B_3");
  return linking_number(a) == linking_number(b) && PSL2Element(project_b3(a)) == PSL2Element(project_b3(b));
}

BraidWord delta3() { return BraidWord(3, {1, 2, 1}); }

BraidWord generator(int strands, int letter) { return BraidWord(strands, {letter}); }

}  // namespace veerlab
