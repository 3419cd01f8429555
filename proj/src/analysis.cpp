#include "gss/analysis.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gss {

namespace {

constexpr std::uint64_t kAuditStateLimit = 10'000'000;

BigInt binomial(std::uint32_t n, std::uint32_t r) {
    if (r > n) {
        return 0;
    }
    BigInt result = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

bool colorable(const Graph& g, std::uint32_t k, std::vector<std::uint32_t>& colors,
               std::uint32_t v) {
    if (v == g.vertex_count()) {
        return true;
    }
    for (std::uint32_t c = 0; c < k; ++c) {
        bool ok = true;
        for (std::uint32_t u = 0; u < v; ++u) {
            if (g.has_edge(u, v) && colors[u] == c) {
                ok = false;
                break;
            }
        }
        if (ok) {
            colors[v] = c;
            if (colorable(g, k, colors, v + 1)) {
                return true;
            }
        }
    }
    return false;
}

// Exact posteriors from observation -> per-secret counts.
SecrecyAuditReport summarize(const std::map<std::string, std::vector<std::uint64_t>>& counts,
                             std::size_t secret_count, BigInt space_size) {
    SecrecyAuditReport report;
    report.space_size = std::move(space_size);
    report.secret_count = secret_count;
    report.reduced_entropy = BigInt(secret_count) < report.space_size;
    report.uniform_posteriors = true;
    report.max_posterior = Rational(0);
    report.min_posterior_support = secret_count;
    for (const auto& [obs, per_secret] : counts) {
        std::uint64_t total = 0;
        std::uint64_t maxc = 0;
        std::size_t support = 0;
        for (std::uint64_t c : per_secret) {
            total += c;
            maxc = std::max(maxc, c);
            if (c > 0) {
                ++support;
            }
        }
        for (std::uint64_t c : per_secret) {
            if (c != per_secret.front()) {
                report.uniform_posteriors = false;
            }
        }
        report.max_posterior =
            std::max(report.max_posterior, Rational(BigInt(maxc), BigInt(total)));
        report.min_posterior_support =
            std::min(report.min_posterior_support, support);
    }
    return report;
}

std::string observation_key(std::uint32_t mask, const std::vector<std::string>& views) {
    std::string key;
    for (std::uint32_t i = 0; i < views.size(); ++i) {
        if (mask & (1u << i)) {
            key += views[i];
            key += '|';
        }
    }
    return key;
}

} // namespace

CensusResult census(std::uint32_t n, const Predicate& predicate) {
    if (n < 1 || n > kCensusMaxVertices) {
        throw AnalysisError("census is exhaustive only for 1 <= n <= 6");
    }
    const std::size_t t = Graph::triangle_size(n);
    const std::uint64_t total = std::uint64_t{1} << t;
    BigInt valid = 0;
    std::vector<std::uint8_t> bits(t);
    for (std::uint64_t pattern = 0; pattern < total; ++pattern) {
        for (std::size_t i = 0; i < t; ++i) {
            bits[i] = static_cast<std::uint8_t>((pattern >> (t - 1 - i)) & 1);
        }
        ColoredGraph cg = ColoredGraph::structure_only(Graph(n, bits));
        if (evaluate_predicate(predicate, cg)) {
            ++valid;
        }
    }
    CensusResult result;
    result.n = n;
    result.predicate = predicate.kind;
    result.total = total;
    result.valid = valid;
    result.fraction = Rational(valid, BigInt(total));
    return result;
}

BigInt connected_count_recurrence(std::uint32_t n) {
    if (n < 1) {
        throw AnalysisError("n must be at least 1");
    }
    std::vector<BigInt> c(n + 1);
    c[1] = 1;
    for (std::uint32_t m = 2; m <= n; ++m) {
        BigInt count = gamma(m);
        for (std::uint32_t j = 1; j < m; ++j) {
            count -= c[j] * binomial(m - 1, j - 1) * gamma(m - j);
        }
        c[m] = count;
    }
    return c[n];
}

std::uint32_t chromatic_number(const Graph& g) {
    if (g.vertex_count() > 10) {
        throw AnalysisError("chromatic number search is desk scale only (n <= 10)");
    }
    for (std::uint32_t k = 1;; ++k) {
        std::vector<std::uint32_t> colors(g.vertex_count(), 0);
        if (colorable(g, k, colors, 0)) {
            return k;
        }
    }
}

SecrecyAuditReport secrecy_audit_kgh(const KghParams& params,
                                     std::vector<std::vector<std::uint32_t>> secrets) {
    params.validate();
    const std::vector<std::uint32_t>& radices = params.radices;
    const BigInt space = mixed_radix_space(radices);
    if (secrets.empty()) {
        if (space > kAuditStateLimit) {
            throw AnalysisError("digit space too large for exhaustive audit");
        }
        const std::uint64_t size = static_cast<std::uint64_t>(space);
        for (std::uint64_t v = 0; v < size; ++v) {
            secrets.push_back(mixed_radix_digits(BigInt(v), radices));
        }
    }
    const std::uint32_t n = params.n_participants;
    BigInt randomness_big = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        randomness_big *= space;
    }
    if (BigInt(secrets.size()) * randomness_big > kAuditStateLimit) {
        throw AnalysisError("state space too large for exhaustive audit");
    }
    const std::uint64_t randomness = static_cast<std::uint64_t>(randomness_big);

    // Per unauthorized subset (every proper nonempty one), observation -> counts.
    std::map<std::string, std::vector<std::uint64_t>> counts;
    std::vector<std::vector<std::uint32_t>> share_digits(n);
    std::vector<std::string> views(n);
    for (std::size_t s = 0; s < secrets.size(); ++s) {
        const std::vector<std::uint32_t>& secret = secrets[s];
        if (secret.size() != radices.size()) {
            throw AnalysisError("secret length does not match radices");
        }
        for (std::uint64_t r = 0; r < randomness; ++r) {
            std::uint64_t rest = r;
            for (std::uint32_t i = 0; i + 1 < n; ++i) {
                const std::uint64_t v = rest % static_cast<std::uint64_t>(space);
                rest /= static_cast<std::uint64_t>(space);
                share_digits[i] = mixed_radix_digits(BigInt(v), radices);
            }
            share_digits[n - 1].assign(radices.size(), 0);
            for (std::size_t pos = 0; pos < radices.size(); ++pos) {
                std::uint64_t sum = 0;
                for (std::uint32_t i = 0; i + 1 < n; ++i) {
                    sum += share_digits[i][pos];
                }
                share_digits[n - 1][pos] = static_cast<std::uint32_t>(
                    (secret[pos] + radices[pos] - sum % radices[pos]) % radices[pos]);
            }
            for (std::uint32_t i = 0; i < n; ++i) {
                views[i].clear();
                for (std::uint32_t d : share_digits[i]) {
                    views[i] += std::to_string(d);
                    views[i] += ',';
                }
            }
            const std::uint32_t full = (1u << n) - 1;
            for (std::uint32_t mask = 1; mask < full; ++mask) {
                std::string key = std::to_string(mask) + ':' + observation_key(mask, views);
                auto [it, inserted] = counts.try_emplace(key);
                if (inserted) {
                    it->second.assign(secrets.size(), 0);
                }
                ++it->second[s];
            }
        }
    }
    return summarize(counts, secrets.size(), space);
}

SecrecyAuditReport secrecy_audit_shamir(std::uint64_t prime, std::uint32_t t,
                                        std::uint32_t n_participants,
                                        std::vector<std::uint64_t> secrets) {
    ShamirParams params{t, n_participants, prime};
    params.validate();
    if (!is_test_prime(prime)) {
        throw AnalysisError("exhaustive audit needs a test prime");
    }
    if (secrets.empty()) {
        for (std::uint64_t s = 0; s < prime; ++s) {
            secrets.push_back(s);
        }
    }
    std::uint64_t randomness = 1;
    for (std::uint32_t i = 1; i < t; ++i) {
        randomness *= prime;
    }
    if (secrets.size() * randomness > kAuditStateLimit) {
        throw AnalysisError("state space too large for exhaustive audit");
    }

    std::map<std::string, std::vector<std::uint64_t>> counts;
    std::vector<std::string> views(n_participants);
    std::vector<std::uint64_t> coeffs(t);
    for (std::size_t s = 0; s < secrets.size(); ++s) {
        if (secrets[s] >= prime) {
            throw AnalysisError("secret not a field element");
        }
        for (std::uint64_t r = 0; r < randomness; ++r) {
            coeffs[0] = secrets[s];
            std::uint64_t rest = r;
            for (std::uint32_t c = 1; c < t; ++c) {
                coeffs[c] = rest % prime;
                rest /= prime;
            }
            for (std::uint32_t i = 0; i < n_participants; ++i) {
                const std::uint64_t x = i + 1;
                std::uint64_t y = 0;
                for (std::uint32_t c = t; c-- > 0;) {
                    y = (y * x + coeffs[c]) % prime;
                }
                views[i] = std::to_string(y) + ',';
            }
            for (std::uint32_t mask = 1; mask < (1u << n_participants); ++mask) {
                if (static_cast<std::uint32_t>(__builtin_popcount(mask)) >= t) {
                    continue;
                }
                std::string key = std::to_string(mask) + ':' + observation_key(mask, views);
                auto [it, inserted] = counts.try_emplace(key);
                if (inserted) {
                    it->second.assign(secrets.size(), 0);
                }
                ++it->second[s];
            }
        }
    }
    return summarize(counts, secrets.size(), BigInt(prime));
}

} // namespace gss
