#pragma once

#include <span>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace gravdiscord {

// Conventions: quadratures ordered (x1, p1, x2, p2, ...), vacuum covariance = identity,
// zero first moments throughout.

using Matrix = Eigen::MatrixXd;
using Matrix2 = Eigen::Matrix2d;

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPhysicalityTolerance = 1e-9;
inline constexpr double kSymplecticTolerance = 1e-12;

/// Covariance matrix of an n-mode zero-mean Gaussian state. Construction checks
/// symmetry and the uncertainty relation (every symplectic eigenvalue >= 1, up to
/// 1e-9 or the rounding floor eps * cond(sigma), whichever is larger).
class CovarianceMatrix {
public:
    explicit CovarianceMatrix(Matrix entries);

    static CovarianceMatrix vacuum(int modes);

    int modes() const noexcept { return static_cast<int>(entries_.rows() / 2); }
    const Matrix& matrix() const noexcept { return entries_; }
    double operator()(int row, int col) const { return entries_(row, col); }
    /// 2x2 block coupling mode i (rows) to mode j (columns).
    Matrix2 block(int i, int j) const { return entries_.block<2, 2>(2 * i, 2 * j); }

    /// Row-major, 17 significant digits, one matrix row per line.
    std::string to_text() const;
    static CovarianceMatrix from_text(const std::string& text);

private:
    Matrix entries_;
};

/// Two-mode standard form [[a I, C], [C^T, b I]] with C = diag(c1, c2).
struct StandardForm {
    double a = 1.0;
    double b = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;

    /// Reconstructs the covariance; throws NonPhysical if it violates the uncertainty relation.
    CovarianceMatrix to_covariance() const;
    /// Validates a, b >= 1 and physicality.
    void validate() const;
};

class SymplecticTransform {
public:
    /// Throws InvalidArgument unless S Omega S^T = Omega within 1e-12.
    explicit SymplecticTransform(Matrix s);

    int modes() const noexcept { return static_cast<int>(s_.rows() / 2); }
    const Matrix& matrix() const noexcept { return s_; }

private:
    Matrix s_;
};

/// Block-diagonal symplectic form, ((0, 1), (-1, 0)) per mode.
Matrix symplectic_form(int modes);

CovarianceMatrix tmss_covariance(double squeezing);

/// Modes (b1, b2, b1_perp, b2_perp): two-mode squeezed pair next to two vacua.
CovarianceMatrix initial_extended_covariance(double squeezing);

/// Mode-mixing of each signal with its orthogonal mode on the ordering of
/// initial_extended_covariance. theta1 = 1 reproduces the ground-side perfect channel.
SymplecticTransform channel_symplectic(double theta2);
SymplecticTransform channel_symplectic(double theta1, double theta2);

/// S sigma S^T.
CovarianceMatrix apply_symplectic(const CovarianceMatrix& state, const SymplecticTransform& s);

/// Principal submatrix on the kept modes, in the order given.
CovarianceMatrix partial_trace(const CovarianceMatrix& state, std::span<const int> keep);

/// Closed form for the pair after mode b2 crosses a channel of transmissivity theta2.
CovarianceMatrix lossy_state_closed_form(double squeezing, double theta2);

/// Same state directly in standard form.
StandardForm lossy_standard_form(double squeezing, double theta2);

/// (nu_minus, nu_plus) of a two-mode state from its block determinants.
std::pair<double, double> symplectic_eigenvalues(const CovarianceMatrix& state);

/// All n symplectic eigenvalues (ascending): the positive spectrum of the Hermitian
/// i L^T Omega L with sigma = L L^T. Throws NonPhysical if sigma is not positive definite.
Eigen::VectorXd symplectic_spectrum(const CovarianceMatrix& state);

/// ln det of a symmetric positive-definite matrix via Cholesky.
double log_determinant(const Matrix& m);

/// S_2 = 1/2 ln det sigma, in nats.
double renyi2_entropy(const CovarianceMatrix& state);

/// Reads (a, b, c1, c2); throws NotInStandardForm when blocks are not
/// proportional to the identity / diagonal within 1e-9.
StandardForm standard_form_params(const CovarianceMatrix& state);

}  // namespace gravdiscord
