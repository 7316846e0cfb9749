#include <tensorlib/contraction.hpp>

namespace tl {

void validate_spec(const ContractionSpec& spec, std::span<const std::size_t> extents_a,
                   std::span<const std::size_t> extents_b) {
    if (spec.q + spec.r == 0 || spec.q + spec.s == 0)
        throw argument_error("ttt: operands need q + r >= 1 and q + s >= 1");
    if (extents_a.size() != spec.q + spec.r)
        throw argument_error("ttt: first operand has order " + std::to_string(extents_a.size()) + ", spec expects " +
                             std::to_string(spec.q + spec.r));
    if (extents_b.size() != spec.q + spec.s)
        throw argument_error("ttt: second operand has order " + std::to_string(extents_b.size()) + ", spec expects " +
                             std::to_string(spec.q + spec.s));
    detail::require_permutation(spec.phi, spec.q + spec.r, "ttt: phi");
    detail::require_permutation(spec.psi, spec.q + spec.s, "ttt: psi");
    for (std::size_t k = 0; k < spec.q; ++k) {
        const auto na = extents_a[spec.phi[spec.r + k] - 1];
        const auto nb = extents_b[spec.psi[spec.s + k] - 1];
        if (na != nb)
            throw argument_error("ttt: contracted dimensions " + std::to_string(spec.phi[spec.r + k]) + " and " +
                                 std::to_string(spec.psi[spec.s + k]) + " have extents " + std::to_string(na) +
                                 " and " + std::to_string(nb));
    }
}

std::vector<std::size_t> ttt_extents(const ContractionSpec& spec, std::span<const std::size_t> extents_a,
                                     std::span<const std::size_t> extents_b) {
    std::vector<std::size_t> extents;
    for (std::size_t k = 0; k < spec.r; ++k) extents.push_back(extents_a[spec.phi[k] - 1]);
    for (std::size_t k = 0; k < spec.s; ++k) extents.push_back(extents_b[spec.psi[k] - 1]);
    if (extents.empty()) extents.push_back(1);
    return extents;
}

namespace {

std::vector<std::size_t> free_then_mode(std::size_t p, std::size_t m) {
    std::vector<std::size_t> phi;
    for (std::size_t d = 1; d <= p; ++d)
        if (d != m) phi.push_back(d);
    phi.push_back(m);
    return phi;
}

} // namespace

ContractionSpec reduce_ttv_to_ttt(std::size_t p, std::size_t m) {
    detail::require_mode(m, p, "reduce_ttv_to_ttt");
    return {1, p - 1, 0, free_then_mode(p, m), {1}};
}

ContractionSpec reduce_ttm_to_ttt(std::size_t p, std::size_t m) {
    detail::require_mode(m, p, "reduce_ttm_to_ttt");
    return {1, p - 1, 1, free_then_mode(p, m), {1, 2}};
}

std::vector<std::size_t> ttm_transposition(std::size_t p, std::size_t m) {
    detail::require_mode(m, p, "ttm_transposition");
    std::vector<std::size_t> tau(p);
    for (std::size_t r = 1; r <= p; ++r) tau[r - 1] = r < m ? r : (r == m ? p : r - 1);
    return tau;
}

} // namespace tl
