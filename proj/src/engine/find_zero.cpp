#include <stdexcept>

#include "subtropical/engine.hpp"

namespace subtropical {

ZeroCertificate construct_zero(const MultiPoly &f, const EvalPoint &p, std::span<const Rational> q,
                               unsigned approx_digits) {
    if (p.dimension() != f.dimension() || q.size() != f.dimension())
        throw std::invalid_argument("segment endpoint dimension mismatch");
    const Rational fp = evaluate(f, p);
    const Rational fq = evaluate(f, EvalPoint::from_rationals(q));
    if (sgn(fp) * sgn(fq) >= 0) throw PreconditionViolated("f(p) * f(q) must be negative");

    const std::vector<Rational> pr = p.to_rationals();
    ClearedPoly cleared = clear_denominators(line_substitute(f, pr, q));
    std::vector<RealAlgebraicNumber> roots = isolate_in_unit_interval(cleared.poly);
    if (roots.empty()) throw std::logic_error("no root on a segment with a sign change");

    ZeroCertificate cert;
    cert.p = p;
    cert.q.assign(q.begin(), q.end());
    cert.gbar = std::move(cleared.poly);
    cert.content = std::move(cleared.denominator);
    cert.r = std::move(roots.front());
    cert.coords.reserve(pr.size());
    for (std::size_t i = 0; i < pr.size(); ++i)
        cert.coords.push_back(make_zero_coordinate(affine_image(cert.r, pr[i], q[i] - pr[i]), approx_digits));
    return cert;
}

namespace {

ZeroCertificate trivial_certificate(std::size_t d) {
    ZeroCertificate cert;
    cert.p = EvalPoint::ones(d);
    cert.q.assign(d, Rational(1));
    cert.content = 1;
    cert.r = RealAlgebraicNumber::exact(Rational(1, 2));
    for (std::size_t i = 0; i < d; ++i) cert.coords.push_back({RealAlgebraicNumber::exact(1), std::nullopt});
    return cert;
}

} // namespace

Outcome find_zero(const MultiPoly &f, const FindZeroOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{Failed{}, std::nullopt, {}, {}};
    auto finish = [&]() {
        out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return out;
    };

    if (f.is_zero()) {
        ZeroCertificate cert = trivial_certificate(f.dimension());
        for (auto &c : cert.coords) c.decimal = to_decimal(1, options.approx_digits);
        out.result = ZeroFound{std::move(cert)};
        return finish();
    }
    const Integer at_ones = f.coefficient_sum();
    if (at_ones == 0) {
        out.result = AllOnes{};
        return finish();
    }
    const bool negated = at_ones > 0;
    const MultiPoly normalized = negated ? -f : f;

    if (options.mode == SearchMode::positive && detect_definite(support_partition(normalized))) {
        out.result = Definite{negated ? 1 : -1};
        return finish();
    }

    SearchResult found;
    if (options.existence_only) found = find_direction(normalized, options.mode, options.engine);
    else if (options.mode == SearchMode::positive) found = find_positive(normalized, options.engine);
    else found = find_positive_general(normalized, options.engine);
    out.stats = found.stats;
    if (!found.witness) return finish();

    Witness w = std::move(*found.witness);
    w.negated = negated;
    out.witness = w;
    if (options.existence_only) {
        out.result = PositiveValue{std::move(w)};
        return finish();
    }
    ZeroCertificate cert =
        construct_zero(normalized, *w.point, std::vector<Rational>(f.dimension(), Rational(1)), options.approx_digits);
    // Report the univariate polynomial for the input as given.
    if (negated) cert.gbar = -cert.gbar;
    out.result = ZeroFound{std::move(cert)};
    return finish();
}

} // namespace subtropical
