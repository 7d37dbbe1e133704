// Walks through the isotope C(1,1,0) of J2 and the Albert isotopes of C(rho).

#include <iostream>

#include "albert/albert.hpp"

int main() {
    using namespace albert;
    const FieldDescriptor Q = FieldDescriptor::rational();
    const Algebra J = make_j2(Q);

    const Element c = J.element({1, 1, 0});
    const auto report = r_mult_report(c);
    std::cout << "R_c for c = " << c.to_string() << ": " << report.matrix << "\n";

    const Algebra iso = standard_isotope(J, mat_inv(report.matrix));
    const auto unit = find_unit(iso);
    std::cout << "unit of the isotope: " << (unit ? unit->to_string() : "none") << "\n";
    std::cout << "isotope is Jordan: " << (is_jordan(iso) ? "yes" : "no") << "\n";

    for (int r : {1, 3, -4}) {
        const Certificate cert = witness_lemma11(Scalar(Q, r));
        std::cout << cert.title() << ": " << (cert.verdict() ? "verified" : "FAILED") << "\n";
    }

    const Certificate t1 = witness_theorem1(Scalar(Q, 5), Scalar(Q, 2), Scalar(Q, 3));
    std::cout << t1.title() << ": " << (t1.verdict() ? "verified" : "FAILED") << "\n";
    std::cout << "  phi = " << t1.matrices.at("isotopy_phi") << "\n";
    std::cout << "  xi  = " << t1.matrices.at("isotopy_xi") << "\n";
    return 0;
}
