#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qsc {

struct rootsys_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using IVec = std::vector<long>;   // integer coordinate vector
using IMat = std::vector<IVec>;   // row major

enum class Series { A, B, C, D, G };

/// Cartan datum of a finite-type simple Lie algebra.
/// cartan[i][j] = c_ij with K_i X_j K_i^{-1} = q_i^{c_ij} X_j, and
/// <alpha_i, alpha_j> = d_i c_ij symmetric. Indices are 0-based internally;
/// the parser and printers use the 1-based labels of the Dynkin diagram.
class CartanDatum {
public:
  CartanDatum(Series s, int rank);
  static CartanDatum parse(const std::string& label);  // "A2", "B2", ...

  Series series() const { return series_; }
  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const IMat& cartan() const { return cartan_; }
  const IVec& sym_d() const { return d_; }
  long c(int i, int j) const { return cartan_[i][j]; }
  long d(int i) const { return d_[i]; }

  // <alpha_i, alpha_j> = d_i c_ij
  long root_pairing(int i, int j) const { return d_[i] * cartan_[i][j]; }

  // fundamental-weight coordinates of a root-lattice vector (alpha-coords a)
  IVec alpha_to_fund(const IVec& a) const;
  // inverse; exact, throws if the weight is not in the root lattice
  IVec fund_to_alpha(const IVec& n) const;
  std::vector<mpq_class> fund_to_alpha_rat(const IVec& n) const;

  // symmetric form <.,.> on P x P (rational in general)
  mpq_class pairing_fund(const IVec& n1, const IVec& n2) const;
  // <lambda, beta> for lambda in fundamental coords, beta in alpha coords (integer)
  long pairing_fund_alpha(const IVec& n, const IVec& a) const;

  // all positive roots, in alpha coordinates
  const std::vector<IVec>& positive_roots() const { return pos_roots_; }
  long height(const IVec& a) const;
  bool is_positive_root(const IVec& a) const;

private:
  Series series_;
  int rank_;
  std::string label_;
  IMat cartan_;
  IVec d_;
  std::vector<IVec> pos_roots_;
  void build_positive_roots();
};

/// Element of the Weyl group: integral matrix of the action on P in the
/// fundamental-weight basis together with a fixed reduced word
/// (lexicographically smallest among the shortest).
struct WeylElement {
  IMat matrix;
  std::vector<int> canonical_word;  // 1-based reflection indices

  int length() const { return (int)canonical_word.size(); }
  bool is_identity() const { return canonical_word.empty(); }
  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
  bool operator<(const WeylElement& o) const { return matrix < o.matrix; }
};

WeylElement identity_element(const CartanDatum& cd);
WeylElement simple_reflection(const CartanDatum& cd, int i);  // 1-based

struct WordResult {
  WeylElement element;
  bool is_reduced;
};
WordResult word_to_element(const CartanDatum& cd, const std::vector<int>& word);

IVec mat_apply(const IMat& m, const IVec& v);
IMat mat_mul(const IMat& a, const IMat& b);

// action on a root given in alpha coordinates (result in alpha coordinates)
IVec apply_to_root(const CartanDatum& cd, const WeylElement& w, const IVec& a);

// inversion count of w, i.e. l(w)
int inversion_count(const CartanDatum& cd, const WeylElement& w);

// roots beta_1 = alpha_{i_1}, beta_2 = s_{i_1}(alpha_{i_2}), ... in alpha
// coordinates; rejects non-reduced words
std::vector<IVec> inversion_roots(const CartanDatum& cd, const std::vector<int>& word);

struct SupportSets {
  std::set<int> S;  // 1-based
  std::set<int> I;
};
SupportSets support_sets(const CartanDatum& cd, const WeylElement& w);

// the whole Weyl group with canonical words, in BFS order from the identity
const std::vector<WeylElement>& weyl_group(const CartanDatum& cd);

// all reduced words of w (for cross-checking word independence)
std::vector<std::vector<int>> all_reduced_words(const CartanDatum& cd, const WeylElement& w);

WeylElement longest_element(const CartanDatum& cd);
WeylElement inverse(const CartanDatum& cd, const WeylElement& w);

std::vector<int> parse_word(const std::string& s, int rank);  // "1,2,1" ("" = identity)
std::string word_str(const std::vector<int>& word);

} // namespace qsc
