#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symknot/algebra.hpp"
#include "symknot/seifert.hpp"

namespace symknot {

// Point omega = e^{i theta} of the unit circle other than 1, stored through
// its cosine and the half plane it lies in. angle() is theta / pi when it
// is known to be rational.
class UnitCirclePoint {
 public:
  static UnitCirclePoint from_angle(long long p, long long q);
  static UnitCirclePoint from_angle(const Rational& over_pi);
  static UnitCirclePoint from_cosine(const AlgebraicReal& x, bool upper,
                                     std::optional<Rational> angle = std::nullopt);

  const AlgebraicReal& cosine() const { return x_; }
  bool upper() const { return upper_; }
  const std::optional<Rational>& angle() const { return angle_; }
  // theta / pi in (0, 2).
  double angle_approx() const;
  std::string label() const;
  UnitCirclePoint conjugate() const;

 private:
  AlgebraicReal x_;
  bool upper_ = true;
  std::optional<Rational> angle_;
};

std::string angle_label(const Rational& over_pi);
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

struct SignatureValue {
  int signature = 0;
  int nullity = 0;
  bool operator==(const SignatureValue&) const = default;
};

struct SignatureOptions {
  // Evaluate independent diagonal blocks of V separately.
  bool split_blocks = true;
};

// Exact Levine-Tristram evaluation for one Seifert matrix. For
// omega = e^{i theta} the form (1 - omega) V + (1 - conj omega) V^T is a
// positive multiple of G = S - i tau A with S = V + V^T, A = V - V^T and
// tau = cot(theta / 2). The characteristic polynomial coefficients of G are
// even in tau, so they become integer polynomials r_k in x = cos theta and
// the inertia follows from their signs by Descartes' rule.
class SignatureForm {
 public:
  explicit SignatureForm(const SeifertMatrix& v, const SignatureOptions& opts = {});

  SignatureValue at(const UnitCirclePoint& omega) const;
  SignatureValue at_cosine(const AlgebraicReal& x) const;
  int size() const { return size_; }

 private:
  struct Block {
    int size = 0;
    std::vector<UPoly> r;
  };
  static Block build_block(const Matrix<long long>& v);

  int size_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> block_repeat_;
};

int lt_signature_at(const SeifertMatrix& v, const UnitCirclePoint& omega, int* nullity = nullptr,
                    const SignatureOptions& opts = {});

// Evaluate many points; the parallel version splits them across threads
// and returns the same vector as the serial one.
std::vector<SignatureValue> signatures_at(const SignatureForm& form,
                                          const std::vector<UnitCirclePoint>& points);
std::vector<SignatureValue> signatures_at_serial(const SignatureForm& form,
                                                 const std::vector<UnitCirclePoint>& points);

struct ProfileJump {
  UnitCirclePoint point;
  int multiplicity = 0;
  int value = 0;
  int nullity = 0;
  int left = 0;
  int right = 0;
  double average() const { return (left + right) / 2.0; }
};

struct ProfileArc {
  // Simplest rational angle in the middle half of the arc, used as its name.
  Rational label_angle;
  // Cosine of the point where the value was computed.
  AlgebraicReal sample;
  int value = 0;
};

struct ProfileRecord {
  std::string angle;
  bool jump = false;
  int sigma = 0;
  int multiplicity = 0;
  bool operator==(const ProfileRecord&) const = default;
};

// omega -> sigma_omega on the upper half circle (0, pi]; the lower half
// follows by conjugation. arcs.size() == jumps.size() + 1, unless pi itself
// is a jump, in which case the two match.
struct SignatureProfile {
  std::vector<ProfileArc> arcs;
  std::vector<ProfileJump> jumps;
  LaurentPoly alexander;

  bool jump_at_pi() const;
  int max_abs() const;
  // Smallest angle attaining max_abs, with its value and whether it is a jump.
  struct Witness {
    std::string angle;
    int sigma = 0;
    bool jump = false;
  };
  Witness argmax() const;
  // Largest |sigma| over arcs only (omega off the roots of Delta).
  Witness arc_argmax() const;
  int value_at(const UnitCirclePoint& omega) const;
  // Full circle, increasing angle.
  std::vector<ProfileRecord> records() const;
  std::string serialize() const;
};

SignatureProfile signature_profile(const SeifertMatrix& v, const SignatureOptions& opts = {});

}  // namespace symknot
