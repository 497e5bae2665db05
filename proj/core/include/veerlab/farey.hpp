#pragma once

#include <string>
#include <vector>

#include "veerlab/modular.hpp"
#include "veerlab/verdict.hpp"

namespace veerlab {

// Extended rational slope p/q stored as the primitive column (q, p), with
// q > 0, or (0, 1) for infinity.
struct ExtSlope {
  Integer q = 1, p = 0;

  ExtSlope() = default;
  ExtSlope(Integer q_, Integer p_);  // normalizes; throws InputError on (0, 0)
  static ExtSlope infinity() { return ExtSlope(0, 1); }
  bool is_infinity() const { return q == 0; }
  friend bool operator==(const ExtSlope& x, const ExtSlope& y) { return x.q == y.q && x.p == y.p; }
};

std::string to_string(const ExtSlope& s);  // "p/q", infinity is "1/0"

struct FareyEdge {
  ExtSlope a, b;  // directed a -> b
  FareyEdge() = default;
  FareyEdge(ExtSlope a_, ExtSlope b_);  // throws InputError unless Farey neighbors
  FareyEdge reversed() const { return FareyEdge(b, a); }
  bool same_undirected(const FareyEdge& o) const { return (a == o.a && b == o.b) || (a == o.b && b == o.a); }
  friend bool operator==(const FareyEdge& x, const FareyEdge& y) { return x.a == y.a && x.b == y.b; }
};

std::string to_string(const FareyEdge& e);

// Image of the slope under z = p/q -> (cq + dp)/(aq + bp).
ExtSlope act(const SL2Matrix& m, const ExtSlope& s);
FareyEdge edge_of(const PSL2Element& g);
PSL2Element element_of(const FareyEdge& e);

enum class Move { A, B, Binv };
FareyEdge neighbor(const FareyEdge& e, Move move);

struct TurnWord {
  std::string letters;  // over {L, R}

  TurnWord() = default;
  explicit TurnWord(std::string s);  // throws InputError on other characters
  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  long rights_minus_lefts() const;
  TurnWord inverse() const;  // reverse and swap L <-> R
  friend TurnWord operator+(const TurnWord& x, const TurnWord& y) { return TurnWord(x.letters + y.letters); }
  friend bool operator==(const TurnWord& x, const TurnWord& y) { return x.letters == y.letters; }
};

// Geodesic in the dual tree from the undirected edge 0-infinity to the
// undirected edge of g. The walk element after the turns is
// A^{lower} (B^{e_1} A) ... (B^{e_m} A) with e_i = +1 for R and -1 for L; it
// has g's undirected edge, and `reversed` records whether a final A is
// needed to match g's direction.
struct TurnPath {
  bool lower = false;
  TurnWord word;
  bool reversed = false;
  std::vector<FareyEdge> edges;  // edges crossed, starting with 0 -> infinity
};

TurnPath turn_path(const PSL2Element& g);
TurnWord turn_word(const PSL2Element& g);
long rademacher_turns(const PSL2Element& g);
// Re-walks recorded turns from 0-infinity and returns the element reached.
PSL2Element walk(bool lower, const TurnWord& w, bool reversed);

// All P with XP = PW and |P| < |X| (one period of the solution family
// (uv)^i u). Empty when |X| != |W|.
std::vector<TurnWord> solve_xp_eq_pw(const TurnWord& X, const TurnWord& W);
bool xp_eq_pw_solvable(const TurnWord& X, const TurnWord& W);

// Decides whether any of the four word-equation families admits a solution.
// Yes means none does; No carries the solution found.
Verdict lk2_nonqp_certificate(const TurnWord& W);

}  // namespace veerlab
