#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsc/linalg.hpp"
#include "qsc/qarith.hpp"
#include "qsc/rootsys.hpp"

namespace qsc {

struct cap_overflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_in_uw : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Letters of the free algebra on E_i, F_i (K's are carried separately).
/// Codes 0..r-1 are F_1..F_r, codes r..2r-1 are E_1..E_r, so the numeric
/// order realizes F_1 < ... < F_r < E_1 < ... < E_r.
using Word = std::vector<std::uint8_t>;

inline std::uint8_t letter_F(int i0, int /*r*/) { return (std::uint8_t)i0; }
inline std::uint8_t letter_E(int i0, int r) { return (std::uint8_t)(r + i0); }
inline bool is_E(std::uint8_t l, int r) { return l >= r; }
inline int letter_index(std::uint8_t l, int r) { return l >= r ? l - r : l; }  // 0-based

/// word * K_1^{k_1} ... K_r^{k_r}
struct Mono {
  Word word;
  IVec kexp;

  bool operator==(const Mono& o) const { return word == o.word && kexp == o.kexp; }
};

/// graded order: word length, then lex on letters, then lex on K exponents
struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.kexp < b.kexp;
  }
};

/// Element of U_q(g) as a linear combination of monomials.
class NCPoly {
public:
  using Terms = std::map<Mono, RatFunc, MonoLess>;

  NCPoly() = default;
  static NCPoly scalar(int r, const RatFunc& c);

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }
  std::size_t max_word_length() const;

  void add(const Mono& m, const RatFunc& c);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator-() const;
  NCPoly scaled(const RatFunc& c) const;
  bool operator==(const NCPoly& o) const { return t_ == o.t_; }
  bool operator!=(const NCPoly& o) const { return !(*this == o); }

  // leading (largest) term
  const std::pair<const Mono, RatFunc>& lead() const;

private:
  Terms t_;
};

/// Oriented rewriting rule lhs -> rhs with lhs strictly larger than every
/// monomial of rhs. lhs carries no K part.
struct Rule {
  Word lhs;
  NCPoly rhs;
};

/// Degree-truncated rewriting engine for the defining relations of U_q(g).
/// After construction the rule set is completed on all critical pairs with
/// overlap length <= cap, making normal forms canonical for inputs of total
/// generator-degree <= cap. Immutable afterwards; safe for concurrent reads.
class Engine {
public:
  Engine(const CartanDatum& cd, int degree_cap = 12);

  const CartanDatum& datum() const { return cd_; }
  int cap() const { return cap_; }
  std::size_t rule_count() const { return rules_.size(); }
  // true when every critical pair (not just those of overlap <= cap) resolved
  bool globally_confluent() const { return globally_confluent_; }

  // generators as polynomials
  NCPoly gen_E(int i) const;  // 1-based
  NCPoly gen_F(int i) const;
  NCPoly gen_K(int i, int exp = 1) const;

  // Q-degree (alpha coordinates) of a monomial / homogeneous polynomial
  IVec q_degree(const Mono& m) const;
  std::optional<IVec> q_degree(const NCPoly& x) const;  // nullopt if mixed

  // free product with the K-shuffle scalar
  NCPoly mul(const NCPoly& a, const NCPoly& b) const;
  NCPoly mul_chain(const std::vector<NCPoly>& factors) const;

  // canonical representative modulo the defining relations; idempotent.
  // Throws cap_overflow when a term exceeds the completion cap.
  NCPoly normal_form(const NCPoly& x) const;

  // Lusztig braid automorphism T_i applied to x (then normal form)
  NCPoly braid_T(int i, const NCPoly& x) const;
  // T_{i_1} T_{i_2} ... T_{i_k}(x)
  NCPoly braid_word(const std::vector<int>& word, const NCPoly& x) const;

  std::string render(const NCPoly& x) const;

private:
  CartanDatum cd_;
  int cap_;
  bool globally_confluent_ = true;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> rules_by_letter_;  // first letter -> rule ids

  long k_shuffle_exp(const IVec& kexp, const IVec& qdeg) const;
  NCPoly mono_mul(const Mono& a, const RatFunc& ca, const Mono& b, const RatFunc& cb) const;
  NCPoly letter_image_T(int i0, std::uint8_t letter) const;
  NCPoly reduce(const NCPoly& x) const;
  void add_rule(const NCPoly& relation);
  void complete();
  friend struct EngineTestAccess;
};

std::shared_ptr<const Engine> make_engine(const CartanDatum& cd, int degree_cap = 12);

class GradedPiece;
struct PieceCache;

/// PBW data of U^w_{sign} for a fixed reduced word. Move-only: PBWVectors and
/// cached graded pieces refer back to their context.
struct PBWContext {
  std::shared_ptr<const Engine> engine;
  std::vector<int> word;              // reduced word (1-based letters)
  int sign = +1;                      // +1 -> U^w_+, -1 -> U^w_-
  WeylElement w;
  std::vector<IVec> betas;            // alpha coords of beta_1..beta_l
  std::vector<NCPoly> root_vectors;   // normal forms of X_{beta_k}
  std::shared_ptr<PieceCache> pieces; // per-degree bases, lock-guarded

  PBWContext() = default;
  PBWContext(PBWContext&&) = default;
  PBWContext& operator=(PBWContext&&) = default;
  PBWContext(const PBWContext&) = delete;
  PBWContext& operator=(const PBWContext&) = delete;

  int length() const { return (int)word.size(); }
  const CartanDatum& datum() const { return engine->datum(); }
  // Q-degree of the PBW monomial with the given multidegree
  IVec degree_of(const std::vector<int>& multideg) const;
  long height_of(const std::vector<int>& multideg) const;
  // <beta_i, beta_j> (1-based)
  long beta_pairing(int i, int j) const;
};

PBWContext build_context(std::shared_ptr<const Engine> engine,
                         const std::vector<int>& reduced_word, int sign);

/// Coordinates in the PBW basis (X)^n = X_{beta_l}^{n_l} ... X_{beta_1}^{n_1}.
struct PBWVector {
  const PBWContext* ctx = nullptr;
  std::map<std::vector<int>, RatFunc> coords;

  bool is_zero() const { return coords.empty(); }
  bool operator==(const PBWVector& o) const { return coords == o.coords; }
  std::string str() const;
};

// filtration order on multidegrees: n < m iff for some j, n_j < m_j and
// n_k = m_k for all k > j
bool multideg_less(const std::vector<int>& a, const std::vector<int>& b);
// highest term of a PBW vector w.r.t. multideg_less
std::pair<std::vector<int>, RatFunc> highest_term(const PBWVector& v);

// all multidegrees n with sum n_k beta_k = gamma (gamma in alpha coords,
// sign-adjusted so entries are nonnegative)
std::vector<std::vector<int>> multidegrees_of(const PBWContext& ctx, const IVec& gamma);
// all distinct Q-degrees of U^w_{sign} with height <= cap, sorted
std::vector<IVec> graded_degrees(const PBWContext& ctx, long height_cap);

// normal form of the PBW monomial (X)^n
NCPoly pbw_monomial(const PBWContext& ctx, const std::vector<int>& n);

/// Linear algebra of one graded component: expresses elements in the PBW
/// monomial basis.
class GradedPiece {
public:
  GradedPiece(const PBWContext& ctx, const IVec& gamma);

  const std::vector<std::vector<int>>& multidegrees() const { return multidegs_; }
  std::size_t dim() const { return multidegs_.size(); }
  // rank of the normal forms of the PBW monomials; the
  // De Concini--Kac--Procesi basis property says this equals dim()
  std::size_t monomial_rank() const;
  // coordinates of x (a normal form, homogeneous of this degree).
  // Throws not_in_uw if x is not in the span.
  PBWVector express(const NCPoly& x) const;
  const NCPoly& monomial_nf(std::size_t idx) const { return nfs_[idx]; }

private:
  const PBWContext* ctx_;
  IVec gamma_;
  std::vector<std::vector<int>> multidegs_;
  std::vector<NCPoly> nfs_;
  std::map<Mono, std::size_t, MonoLess> mono_index_;
  QMatrix mat_;  // columns: PBW monomials; rows: free monomials
};

// cached graded component of the context (built once per degree, safe for
// concurrent callers)
const GradedPiece& graded_piece(const PBWContext& ctx, const IVec& gamma);

// exact PBW coordinates of an arbitrary element (grouped by Q-degree)
PBWVector express_in_pbw(const PBWContext& ctx, const NCPoly& x);

// product of two PBW vectors, re-expressed in PBW coordinates
PBWVector pbw_multiply(const PBWContext& ctx, const PBWVector& u, const PBWVector& v);

// NCPoly realization of a PBW vector
NCPoly realize(const PBWContext& ctx, const PBWVector& v);

// straightening of X_{beta_i} X_{beta_j} - q^{<beta_i,beta_j>} X_{beta_j} X_{beta_i}
// for i < j (1-based); supported strictly between i and j
PBWVector ls_relation(const PBWContext& ctx, int i, int j);

} // namespace qsc
