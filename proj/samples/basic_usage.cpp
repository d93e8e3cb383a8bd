// Runs the variance rule on a small profile and prints the per-seat shares
// with and without the negativity correction.

#include "varphragmen/engine.hpp"
#include "varphragmen/render.hpp"

#include <iostream>

int main() {
    using namespace varphragmen;

    const Profile profile = parse_profile("9: a1, a2\n1: a1, a2, b\n3: b, c\n");
    const auto result = run_election(profile, MethodConfig{Method::var_phragmen, Mode::candidate, 3});

    std::cout << "uncorrected\n" << render_trace_table(profile, result, 4, true);
    std::cout << "\ncorrected\n" << render_trace_table(profile, result, 4);

    // The same election with double precision arithmetic.
    const auto approx = run_election(profile.convert<double>(), MethodConfig{Method::var_phragmen, Mode::candidate, 3});
    std::cout << "\nfloat64 winners:";
    for (const auto& c : approx.winners()) std::cout << ' ' << c;
    std::cout << '\n';
}
