// Generates a random quasi-standard pair on an indefinite degenerate source,
// recovers a decomposition from scratch, and checks both certificates.

#include <hermrank/hermrank.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace hermrank;
    GenConfig cfg;
    cfg.seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2024;
    cfg.source = Signature(2, 1, 1);
    cfg.max_degree = 2;
    const int q = 2;

    auto [pair, witness] = quasi_standard(cfg, q);
    std::cout << "seed " << cfg.seed << ": source " << pair.source.str() << ", target "
              << pair.target.str() << ", q = " << q << "\n";
    std::cout << "generator witness checks: " << (check_decomposition(pair, witness) ? "yes" : "no")
              << "\n";

    const Decomposition dec = decompose(pair);
    std::cout << "recovered decomposition checks: " << (check_decomposition(pair, dec) ? "yes" : "no")
              << "\n";
    std::cout << "  h1 = " << dec.h1.str() << "\n";
    std::cout << "  h2 = " << dec.h2.str() << "\n";
    for (std::size_t i = 0; i < dec.phi_extra.size(); ++i)
        std::cout << "  Phi[" << i + 1 << "] = " << dec.phi_extra[i].str() << "\n";

    // The decomposition is not unique, so B need not match the witness B;
    // both certificates reproduce the same pair exactly.
    std::cout << "matrices agree with witness: " << (dec.b == witness.b ? "yes" : "no")
              << " (agreement is not required)\n";

    const RestrictionReport rep = restriction_classify(pair, 10, cfg.seed + 1);
    std::cout << "restrictions to 10 random (2,1)-subspaces: " << rep.qs_count
              << " quasi-standard, " << rep.null_count << " null, " << rep.other_count
              << " other\n";
    return 0;
}
