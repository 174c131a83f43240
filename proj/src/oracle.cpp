#include "scnewton/oracle.hpp"

#include <cmath>
#include <sstream>

namespace scnewton {

namespace {

std::string point_str(const Eigen::VectorXd& x) {
    std::ostringstream os;
    os << "[" << x.transpose() << "]";
    return os.str();
}

[[noreturn]] void throw_outside(const char* who, const Eigen::VectorXd& x) {
    throw DomainError(std::string(who) + ": point outside domain " + point_str(x));
}

void check_dim(const char* who, const Eigen::VectorXd& x, int n) {
    if (x.size() != n) {
        throw std::invalid_argument(std::string(who) + ": expected dimension " +
                                    std::to_string(n) + ", got " + std::to_string(x.size()));
    }
}

// F(x) = -sum_i log(b_i - a_i^T x)
class LogBarrier final : public FunctionOracle {
public:
    LogBarrier(Eigen::MatrixXd A, Eigen::VectorXd b) : A_(std::move(A)), b_(std::move(b)) {
        if (A_.rows() != b_.size()) {
            throw std::invalid_argument("log_barrier: A has " + std::to_string(A_.rows()) +
                                        " rows but b has " + std::to_string(b_.size()) +
                                        " entries");
        }
        if (A_.rows() == 0 || A_.cols() == 0) {
            throw std::invalid_argument("log_barrier: A must be nonempty");
        }
    }

    int dimension() const override { return static_cast<int>(A_.cols()); }

    bool domain_contains(const Eigen::VectorXd& x) const override {
        if (x.size() != A_.cols()) return false;
        return ((b_ - A_ * x).array() > 0.0).all();
    }

    double value(const Eigen::VectorXd& x) const override {
        const Eigen::VectorXd r = residual(x, "log_barrier::value");
        return -r.array().log().sum();
    }

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override {
        const Eigen::VectorXd r = residual(x, "log_barrier::gradient");
        return A_.transpose() * r.cwiseInverse();
    }

    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const override {
        const Eigen::VectorXd r = residual(x, "log_barrier::hessian");
        const Eigen::VectorXd inv2 = r.cwiseInverse().cwiseAbs2();
        return A_.transpose() * inv2.asDiagonal() * A_;
    }

private:
    Eigen::VectorXd residual(const Eigen::VectorXd& x, const char* who) const {
        check_dim(who, x, dimension());
        Eigen::VectorXd r = b_ - A_ * x;
        if (!(r.array() > 0.0).all()) throw_outside(who, x);
        return r;
    }

    Eigen::MatrixXd A_;
    Eigen::VectorXd b_;
};

// F(x) = x^T Q x / 2 + q^T x
class Quadratic final : public FunctionOracle {
public:
    Quadratic(Eigen::MatrixXd Q, Eigen::VectorXd q) : Q_(std::move(Q)), q_(std::move(q)) {
        if (Q_.rows() != Q_.cols()) throw std::invalid_argument("quadratic: Q must be square");
        if (Q_.rows() != q_.size()) {
            throw std::invalid_argument("quadratic: Q is " + std::to_string(Q_.rows()) +
                                        "x" + std::to_string(Q_.cols()) + " but q has " +
                                        std::to_string(q_.size()) + " entries");
        }
        const double scale = std::max(1.0, Q_.cwiseAbs().maxCoeff());
        if ((Q_ - Q_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
            throw std::invalid_argument("quadratic: Q is not symmetric");
        }
    }

    int dimension() const override { return static_cast<int>(Q_.rows()); }
    bool domain_contains(const Eigen::VectorXd& x) const override {
        return x.size() == Q_.rows();
    }

    double value(const Eigen::VectorXd& x) const override {
        check_dim("quadratic::value", x, dimension());
        return 0.5 * x.dot(Q_ * x) + q_.dot(x);
    }

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override {
        check_dim("quadratic::gradient", x, dimension());
        return Q_ * x + q_;
    }

    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const override {
        check_dim("quadratic::hessian", x, dimension());
        return Q_;
    }

private:
    Eigen::MatrixXd Q_;
    Eigen::VectorXd q_;
};

// phi(s) = -(1+rho) s - log(1-s), s < 1
class ExtremalBarrier final : public FunctionOracle {
public:
    explicit ExtremalBarrier(double rho) : rho_(rho) {
        if (!(rho > 0.0)) {
            throw std::invalid_argument("extremal_barrier: rho must be > 0, got " +
                                        std::to_string(rho));
        }
    }

    int dimension() const override { return 1; }
    bool domain_contains(const Eigen::VectorXd& x) const override {
        return x.size() == 1 && x[0] < 1.0;
    }

    double value(const Eigen::VectorXd& x) const override {
        const double s = coord(x, "extremal_barrier::value");
        return -(1.0 + rho_) * s - std::log1p(-s);
    }

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override {
        const double s = coord(x, "extremal_barrier::gradient");
        Eigen::VectorXd g(1);
        g[0] = -(1.0 + rho_) + 1.0 / (1.0 - s);
        return g;
    }

    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const override {
        const double s = coord(x, "extremal_barrier::hessian");
        Eigen::MatrixXd H(1, 1);
        const double d = 1.0 - s;
        H(0, 0) = 1.0 / (d * d);
        return H;
    }

private:
    double coord(const Eigen::VectorXd& x, const char* who) const {
        check_dim(who, x, 1);
        if (!(x[0] < 1.0)) throw_outside(who, x);
        return x[0];
    }

    double rho_;
};

// F(x) = x^4
class Quartic final : public FunctionOracle {
public:
    int dimension() const override { return 1; }
    bool domain_contains(const Eigen::VectorXd& x) const override { return x.size() == 1; }

    double value(const Eigen::VectorXd& x) const override {
        check_dim("quartic::value", x, 1);
        const double v = x[0] * x[0];
        return v * v;
    }

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const override {
        check_dim("quartic::gradient", x, 1);
        Eigen::VectorXd g(1);
        g[0] = 4.0 * x[0] * x[0] * x[0];
        return g;
    }

    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const override {
        check_dim("quartic::hessian", x, 1);
        Eigen::MatrixXd H(1, 1);
        H(0, 0) = 12.0 * x[0] * x[0];
        return H;
    }
};

}  // namespace

OraclePtr make_log_barrier(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    return std::make_shared<LogBarrier>(A, b);
}

OraclePtr make_quadratic(const Eigen::MatrixXd& Q, const Eigen::VectorXd& q) {
    return std::make_shared<Quadratic>(Q, q);
}

OraclePtr make_extremal_barrier(double rho) {
    return std::make_shared<ExtremalBarrier>(rho);
}

OraclePtr make_quartic() { return std::make_shared<Quartic>(); }

}  // namespace scnewton
