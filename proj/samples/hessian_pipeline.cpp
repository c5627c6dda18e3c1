// From a polynomial with singular Hessian to a quasi-translation and its
// normal form.
//
//   hessian_pipeline ["h" [n]]
//
// Defaults to h = x1^2*x3 + x1*x2*x4 + x2^2*x5 (five variables): singular
// Hessian, but no linear dependence between the partial derivatives.

#include <cstdlib>
#include <iostream>
#include <string>

#include <qtrans/qtrans.hpp>

using namespace qtrans;

int main(int argc, char** argv)
{
    const std::string text = argc > 1 ? argv[1] : "x1^2*x3 + x1*x2*x4 + x2^2*x5";
    const int n = argc > 2 ? std::atoi(argv[2]) : 5;
    const VarNames x = indexed_names(n), y = indexed_names(n, "y");

    Poly h = parse(text, x);
    std::cout << "h = " << print(h, x) << '\n';
    std::cout << "det Hess(h) = " << print(det(hessian(h)), x) << '\n';

    RelationSearch s = find_relation(gradient(h), 6, is_homogeneous(h));
    std::cout << "relation search: " << to_string(s.status) << '\n';
    if (!s.relation) return 1;
    std::cout << "R = " << print(s.relation->r, y) << " (degree " << s.relation->degree << ")\n";

    RelationMap m = qt_from_relation(h, *s.relation);
    std::cout << "H = (grad R)(grad h) = (" << print(m.h, x) << ")\n";
    if (!m.report || !m.report->passed()) {
        std::cout << "not a quasi-translation\n";
        return 1;
    }
    std::cout << "x + H is a quasi-translation, (JH)^" << *m.report->nilpotency_index << " = 0\n";

    SpanReport span = image_span(m.h);
    std::cout << "image span dimension " << span.dim << '\n';

    if (auto cert = hesse_check(h)) {
        std::cout << "linear dependence of the partials:";
        for (const auto& c : cert->c) std::cout << ' ' << to_string(c);
        std::cout << '\n';
        VariableReduction red = reduce_variables(h, *cert);
        std::cout << "h(Tx) = " << print(red.reduced, x) << " is free of x" << n << '\n';
    } else {
        std::cout << "no linear dependence between the partial derivatives\n";
    }

    if (m.h.is_zero()) return 0;
    QuasiTranslation qt(m.h);
    if (n <= 3 || (n == 4 && qt.homogeneous_degree())) {
        Classification c = classify_small(qt);
        std::cout << "normal form (" << print(c.normal_form, x) << "), s = " << c.s << '\n';
        std::cout << "  g = " << print(c.decomposition.g, x) << ", a = " << print(c.decomposition.a, x)
                  << ", b = " << print(c.decomposition.b, x) << '\n';
    }
    return 0;
}
