#include "scnewton/corpus.hpp"

namespace scnewton {

namespace {

Eigen::VectorXd vec1(double a) {
    Eigen::VectorXd v(1);
    v << a;
    return v;
}

Eigen::VectorXd vec2(double a, double b) {
    Eigen::VectorXd v(2);
    v << a, b;
    return v;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> c;

    for (double rho : {0.25, 1.0, 4.0}) {
        std::string suffix = rho == 0.25 ? "0.25" : (rho == 1.0 ? "1" : "4");
        c.push_back({"extremal_barrier_rho" + suffix, make_extremal_barrier(rho), vec1(0.0),
                     true, "univariate worst-case barrier, decrement " + suffix + " at 0"});
    }

    {
        Eigen::MatrixXd A(2, 1);
        A << 1.0, -1.0;
        Eigen::VectorXd b(2);
        b << 1.0, 1.0;
        c.push_back({"log_barrier_interval", make_log_barrier(A, b), vec1(0.3), true,
                     "-log(1-x) - log(1+x) on (-1, 1)"});
    }

    {
        Eigen::MatrixXd A(3, 2);
        A << 1.0, 0.0, 0.0, 1.0, -1.0, -1.0;
        Eigen::VectorXd b(3);
        b << 1.0, 1.0, 1.0;
        c.push_back({"log_barrier_triangle", make_log_barrier(A, b), vec2(0.2, -0.1), true,
                     "barrier of the triangle x<1, y<1, x+y>-1"});
    }

    {
        Eigen::MatrixXd Q(2, 2);
        Q << 2.0, 0.5, 0.5, 1.0;
        Eigen::VectorXd q(2);
        q << 1.0, 0.0;
        c.push_back({"quadratic_pd", make_quadratic(Q, q), vec2(1.0, 1.0), true,
                     "positive definite quadratic; zero third derivative"});
    }

    c.push_back({"quartic", make_quartic(), vec1(0.5), false,
                 "x^4, convex but not self-concordant near 0; negative control"});

    return c;
}

}  // namespace

const std::vector<CorpusEntry>& default_corpus() {
    static const std::vector<CorpusEntry> corpus = build_corpus();
    return corpus;
}

}  // namespace scnewton
