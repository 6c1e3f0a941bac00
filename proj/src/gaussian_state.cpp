#include "gravdiscord/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <vector>

#include "gravdiscord/error.hpp"

namespace gravdiscord {

namespace {

constexpr double kStandardFormTolerance = 1e-9;

Matrix kron_identity2(const Matrix& mode_matrix) {
    const auto n = mode_matrix.rows();
    Matrix out = Matrix::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = mode_matrix(i, j) * Matrix2::Identity();
        }
    }
    return out;
}

void require_unit_interval(double theta, const char* name) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, std::string(name) + " must lie in [0, 1], got " +
                                               std::to_string(theta));
    }
}

void require_squeezing(double s) {
    if (!(std::isfinite(s) && s >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "squeezing parameter must be non-negative");
    }
}

// Entries carry relative rounding eps, which moves nu by up to ~eps cond(sigma);
// for strongly squeezed states that exceeds the fixed tolerance.
double physicality_slack(const Matrix& m) {
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Matrix>(m, Eigen::EigenvaluesOnly).eigenvalues();
    const double cond = ev.cwiseAbs().maxCoeff() / ev.cwiseAbs().minCoeff();
    return std::max(kPhysicalityTolerance, 16.0 * std::numeric_limits<double>::epsilon() * cond);
}

bool is_standard_form(const CovarianceMatrix& state) {
    const Matrix2 a = state.block(0, 0);
    const Matrix2 b = state.block(1, 1);
    const Matrix2 c = state.block(0, 1);
    const double tol = kStandardFormTolerance;
    return std::abs(a(0, 1)) <= tol && std::abs(a(0, 0) - a(1, 1)) <= tol &&
           std::abs(b(0, 1)) <= tol && std::abs(b(0, 0) - b(1, 1)) <= tol &&
           std::abs(c(0, 1)) <= tol && std::abs(c(1, 0)) <= tol;
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0 || entries_.rows() % 2 != 0) {
        throw Error(ErrorKind::DimensionMismatch, "covariance must be a non-empty 2n x 2n matrix");
    }
    if (!entries_.allFinite()) {
        throw Error(ErrorKind::NonPhysical, "covariance has non-finite entries");
    }
    if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
        throw Error(ErrorKind::NonPhysical, "covariance is not symmetric");
    }
    entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
    const Eigen::VectorXd nu = symplectic_spectrum(*this);
    if (nu.minCoeff() < 1.0 - physicality_slack(entries_)) {
        throw Error(ErrorKind::NonPhysical,
                    "symplectic eigenvalue " + std::to_string(nu.minCoeff()) + " below 1");
    }
}

CovarianceMatrix CovarianceMatrix::vacuum(int modes) {
    return CovarianceMatrix(Matrix::Identity(2 * modes, 2 * modes));
}

std::string CovarianceMatrix::to_text() const {
    std::ostringstream out;
    out.precision(17);
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
        for (Eigen::Index j = 0; j < entries_.cols(); ++j) {
            if (j > 0) out << ' ';
            out << entries_(i, j);
        }
        out << '\n';
    }
    return out.str();
}

CovarianceMatrix CovarianceMatrix::from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<double> row;
        double v = 0.0;
        while (fields >> v) row.push_back(v);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != n) {
            throw Error(ErrorKind::DimensionMismatch, "covariance text is not square");
        }
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return CovarianceMatrix(std::move(m));
}

void StandardForm::validate() const {
    if (!(a >= 1.0 - kPhysicalityTolerance && b >= 1.0 - kPhysicalityTolerance)) {
        throw Error(ErrorKind::NonPhysical, "reduced states need a >= 1 and b >= 1");
    }
    (void)to_covariance();
}

CovarianceMatrix StandardForm::to_covariance() const {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = a;
    m(2, 2) = m(3, 3) = b;
    m(0, 2) = m(2, 0) = c1;
    m(1, 3) = m(3, 1) = c2;
    return CovarianceMatrix(std::move(m));
}

SymplecticTransform::SymplecticTransform(Matrix s) : s_(std::move(s)) {
    if (s_.rows() != s_.cols() || s_.rows() == 0 || s_.rows() % 2 != 0) {
        throw Error(ErrorKind::DimensionMismatch, "symplectic matrix must be 2n x 2n");
    }
    const Matrix omega = symplectic_form(modes());
    if ((s_ * omega * s_.transpose() - omega).cwiseAbs().maxCoeff() > kSymplecticTolerance) {
        throw Error(ErrorKind::InvalidArgument, "matrix does not preserve the symplectic form");
    }
}

Matrix symplectic_form(int modes) {
    Matrix omega = Matrix::Zero(2 * modes, 2 * modes);
    for (int k = 0; k < modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

CovarianceMatrix tmss_covariance(double squeezing) {
    require_squeezing(squeezing);
    const double ch = std::cosh(2.0 * squeezing);
    const double sh = std::sinh(2.0 * squeezing);
    Matrix m = Matrix::Zero(4, 4);
    m.diagonal().setConstant(ch);
    m(0, 2) = m(2, 0) = sh;
    m(1, 3) = m(3, 1) = -sh;
    return CovarianceMatrix(std::move(m));
}

CovarianceMatrix initial_extended_covariance(double squeezing) {
    Matrix m = Matrix::Identity(8, 8);
    m.topLeftCorner<4, 4>() = tmss_covariance(squeezing).matrix();
    return CovarianceMatrix(std::move(m));
}

SymplecticTransform channel_symplectic(double theta2) { return channel_symplectic(1.0, theta2); }

SymplecticTransform channel_symplectic(double theta1, double theta2) {
    require_unit_interval(theta1, "theta1");
    require_unit_interval(theta2, "theta2");
    const double t1 = std::sqrt((1.0 - theta1) * (1.0 + theta1));
    const double t2 = std::sqrt((1.0 - theta2) * (1.0 + theta2));
    // Rows/columns: b1, b2, b1_perp, b2_perp. Each signal mixes with its own
    // orthogonal mode through a reflection [[theta, t], [t, -theta]].
    Matrix mixing = Matrix::Zero(4, 4);
    mixing(0, 0) = theta1;
    mixing(0, 2) = t1;
    mixing(2, 0) = t1;
    mixing(2, 2) = -theta1;
    mixing(1, 1) = theta2;
    mixing(1, 3) = t2;
    mixing(3, 1) = t2;
    mixing(3, 3) = -theta2;
    return SymplecticTransform(kron_identity2(mixing));
}

CovarianceMatrix apply_symplectic(const CovarianceMatrix& state, const SymplecticTransform& s) {
    if (state.modes() != s.modes()) {
        throw Error(ErrorKind::DimensionMismatch, "state has " + std::to_string(state.modes()) +
                                                      " modes, transform " +
                                                      std::to_string(s.modes()));
    }
    Matrix out = s.matrix() * state.matrix() * s.matrix().transpose();
    return CovarianceMatrix(0.5 * (out + out.transpose()));
}

CovarianceMatrix partial_trace(const CovarianceMatrix& state, std::span<const int> keep) {
    if (keep.empty()) throw Error(ErrorKind::BadIndex, "no modes kept");
    std::vector<int> seen;
    for (int k : keep) {
        if (k < 0 || k >= state.modes()) {
            throw Error(ErrorKind::BadIndex, "mode index " + std::to_string(k) + " out of range");
        }
        if (std::find(seen.begin(), seen.end(), k) != seen.end()) {
            throw Error(ErrorKind::BadIndex, "mode index " + std::to_string(k) + " repeated");
        }
        seen.push_back(k);
    }
    const auto n = static_cast<Eigen::Index>(keep.size());
    Matrix out(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = state.block(keep[i], keep[j]);
        }
    }
    return CovarianceMatrix(std::move(out));
}

StandardForm lossy_standard_form(double squeezing, double theta2) {
    require_squeezing(squeezing);
    require_unit_interval(theta2, "theta2");
    const double sh = std::sinh(squeezing);
    const double c = std::sinh(2.0 * squeezing) * theta2;
    return {1.0 + 2.0 * sh * sh, 1.0 + 2.0 * sh * sh * theta2 * theta2, c, -c};
}

CovarianceMatrix lossy_state_closed_form(double squeezing, double theta2) {
    return lossy_standard_form(squeezing, theta2).to_covariance();
}

std::pair<double, double> symplectic_eigenvalues(const CovarianceMatrix& state) {
    if (state.modes() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "symplectic_eigenvalues expects two modes");
    }
    const double det_a = state.block(0, 0).determinant();
    const double det_b = state.block(1, 1).determinant();
    const double det_c = state.block(0, 1).determinant();
    const double det_sigma = std::exp(log_determinant(state.matrix()));
    const double delta = det_a + det_b + 2.0 * det_c;
    double disc = 0.0;
    if (is_standard_form(state)) {
        // Delta^2 - 4 det sigma regrouped so that the near-degenerate case
        // (pure states, a ~ b) does not cancel.
        const StandardForm p = standard_form_params(state);
        const double ab = p.a - p.b;
        const double cs = p.c1 + p.c2;
        disc = ab * ab * ((p.a + p.b) * (p.a + p.b) + 4.0 * p.c1 * p.c2) + 4.0 * p.a * p.b * cs * cs;
    } else {
        disc = delta * delta - 4.0 * det_sigma;
    }
    if (disc < 0.0) {
        if (disc < -kPhysicalityTolerance * delta * delta) {
            throw Error(ErrorKind::NonPhysical, "negative discriminant in symplectic spectrum");
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    const double nu_plus_sq = 0.5 * (delta + root);
    // nu_-^2 nu_+^2 = det sigma avoids cancelling Delta - sqrt(...).
    const double nu_minus_sq = det_sigma / nu_plus_sq;
    return {std::sqrt(nu_minus_sq), std::sqrt(nu_plus_sq)};
}

Eigen::VectorXd symplectic_spectrum(const CovarianceMatrix& state) {
    // sigma = L L^T makes i L^T Omega L Hermitian with eigenvalues +-nu, which
    // stays accurate where the non-normal Omega sigma does not.
    Eigen::LLT<Matrix> llt(state.matrix());
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorKind::NonPhysical, "covariance is not positive definite");
    }
    const Matrix l = llt.matrixL();
    const Matrix k = l.transpose() * symplectic_form(state.modes()) * l;
    const Eigen::MatrixXcd hermitian = std::complex<double>(0.0, 1.0) * k.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    // Ascending eigenvalues: -nu_max ... -nu_min, nu_min ... nu_max.
    const Eigen::VectorXd values = solver.eigenvalues();
    return values.tail(state.modes());
}

double log_determinant(const Matrix& m) {
    Eigen::LLT<Matrix> llt(m);
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorKind::NonPhysical, "matrix is not positive definite");
    }
    return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

double renyi2_entropy(const CovarianceMatrix& state) {
    return 0.5 * log_determinant(state.matrix());
}

StandardForm standard_form_params(const CovarianceMatrix& state) {
    if (state.modes() != 2) {
        throw Error(ErrorKind::DimensionMismatch, "standard form needs a two-mode state");
    }
    const Matrix2 a = state.block(0, 0);
    const Matrix2 b = state.block(1, 1);
    const Matrix2 c = state.block(0, 1);
    if (!is_standard_form(state)) {
        throw Error(ErrorKind::NotInStandardForm, "blocks are not in standard form");
    }
    return {0.5 * (a(0, 0) + a(1, 1)), 0.5 * (b(0, 0) + b(1, 1)), c(0, 0), c(1, 1)};
}

}  // namespace gravdiscord
