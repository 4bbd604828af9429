// Walks the generalized Whitney pair through the full pipeline: build,
// verify, extract the multiplier, rank it, classify, and watch the
// decomposition refuse.  Shows why the quasi-standard window is sharp.

#include <hermrank/hermrank.hpp>

#include <iostream>

int main() {
    using namespace hermrank;
    for (auto [r, s] : {std::pair{2, 1}, std::pair{1, 1}, std::pair{2, 2}}) {
        const PolyMapPair pair = whitney(r, s);
        std::cout << "whitney(" << r << "," << s << "): source " << pair.source.str()
                  << " -> target " << pair.target.str() << "\n";
        std::cout << "  phi = (";
        for (std::size_t j = 0; j < pair.phi.size(); ++j)
            std::cout << (j ? ", " : "") << pair.phi[j].str();
        std::cout << ")\n";
        std::cout << "  orthogonal: " << (verify_pair(pair) ? "yes" : "no") << "\n";
        const Classification cls = classify(pair);
        std::cout << "  multiplier: " << cls.mult.str() << "\n";
        const HermitianSignature hs = hermitian_signature(cls.mult);
        std::cout << "  rank " << cls.rank << ", signature (" << hs.pos << "," << hs.neg
                  << "), kind " << to_string(cls.kind) << "\n";
        try {
            decompose(pair);
            std::cout << "  decompose: unexpectedly succeeded\n";
        } catch (const not_quasi_standard& e) {
            std::cout << "  decompose: refused (" << e.what() << ")\n";
        }
        const SampleReport rep = numeric_verify(pair, 100, 1e-9, 7);
        std::cout << "  numeric cross-check: " << rep.failures << " failures, max residual "
                  << rep.max_residual << "\n\n";
    }
    return 0;
}
