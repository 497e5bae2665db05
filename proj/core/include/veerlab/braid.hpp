#pragma once

#include <string>
#include <vector>

namespace veerlab {

// A word in the Artin generators of B_n. Letter i > 0 is sigma_i, i < 0 is
// its inverse. Values are immutable.
class BraidWord {
 public:
  BraidWord() : BraidWord(2) {}
  explicit BraidWord(int strands, std::vector<int> letters = {});

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands_ == b.strands_ && a.letters_ == b.letters_;
  }

 private:
  int strands_;
  std::vector<int> letters_;
};

BraidWord parse_braid(const std::string& text, int strands);
std::string to_string(const BraidWord& b);

long linking_number(const BraidWord& b);
BraidWord free_reduce(const BraidWord& b);
BraidWord invert(const BraidWord& b);
BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord concat(const std::vector<BraidWord>& parts);
BraidWord power(const BraidWord& b, long k);  // k may be negative
BraidWord conjugate(const BraidWord& b, const BraidWord& g);  // g b g^-1
BraidWord stabilize(const BraidWord& b);
bool is_positive(const BraidWord& b);

// Word problem in B_3: same PSL(2,Z) image and same linking number.
bool braid3_equal(const BraidWord& a, const BraidWord& b);

// Frequently used B_3 words.
BraidWord delta3();      // sigma1 sigma2 sigma1
BraidWord generator(int strands, int letter);

}  // namespace veerlab
