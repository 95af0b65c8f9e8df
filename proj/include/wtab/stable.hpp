#pragma once

#include <string>
#include <vector>

#include "wtab/frames.hpp"
#include "wtab/tables.hpp"

namespace wtab {

/// Sign distinguishing the orthogonal (+) and symplectic (-) cases.
enum class Phi { Plus, Minus };

Phi parse_phi(const std::string& s);
std::string to_string(Phi phi);

/// l is φ-even iff (φ = + and l even) or (φ = - and l odd).
bool is_phi_even(int l, Phi phi);
inline bool is_phi_odd(int l, Phi phi) { return !is_phi_even(l, phi); }

/// Row -i read left to right: the negatives of row i in reverse order.
Row negate_reverse(const Row& r);

/// Skew-symmetric table on an s-frame. Only rows 1..m (the bottom half,
/// outermost first) are stored, so row -i is always the negate-reverse of
/// row i.
class STable {
public:
  /// Throws std::invalid_argument on a length mismatch or when the entries
  /// break the integrality rule for φ (φ = +: all in Z or all in 1/2 + Z;
  /// φ = -: all in Z).
  STable(SFrame frame, std::vector<Row> half_rows, Phi phi);

  const SFrame& frame() const { return frame_; }
  const std::vector<Row>& half_rows() const { return half_; }
  Phi phi() const { return phi_; }
  int rank() const { return frame_.rank(); }

  /// Row with label i in {±1..±m}.
  Row row(int label) const;

  /// Rows weakly increasing (membership in sTab_φ^≤).
  bool is_weakly_increasing() const;

  /// Copy with every row sorted.
  STable sorted() const;

  /// Full 2m-row table, top to bottom (labels -1..-m, m..1).
  Table full() const;

  friend bool operator==(const STable&, const STable&) = default;

private:
  SFrame frame_;
  std::vector<Row> half_;
  Phi phi_;
};

/// Deterministic total order on s-tables (for orbit sets and reports).
bool stable_less(const STable& a, const STable& b);

}  // namespace wtab
