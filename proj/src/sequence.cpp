#include "laz/sequence.hpp"

#include "laz/arith.hpp"
#include "laz/error.hpp"

namespace laz {

UnimodSequence::UnimodSequence(std::vector<Phase> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw PreconditionError("sequence length must be at least 1");
}

bool UnimodSequence::all_rational() const {
    for (const Phase& p : entries_) {
        if (!p.is_rational()) return false;
    }
    return true;
}

std::int64_t UnimodSequence::common_denominator() const {
    std::int64_t d = 1;
    for (const Phase& p : entries_) {
        if (p.is_rational()) d = lcm(d, p.den());
    }
    return d;
}

SequenceSet::SequenceSet(std::vector<UnimodSequence> members) : members_(std::move(members)) {
    if (members_.empty()) throw PreconditionError("sequence set must have at least one member");
    length_ = members_.front().length();
    for (const auto& m : members_) {
        if (m.length() != length_) throw PreconditionError("sequence set members must share one length");
    }
}

bool SequenceSet::all_rational() const {
    for (const auto& m : members_) {
        if (!m.all_rational()) return false;
    }
    return true;
}

std::int64_t SequenceSet::common_denominator() const {
    std::int64_t d = 1;
    for (const auto& m : members_) d = lcm(d, m.common_denominator());
    return d;
}

UnimodSequence cyclic_shift(const UnimodSequence& s, std::int64_t tau) {
    const std::int64_t n = s.length();
    std::vector<Phase> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) out.push_back(s[mod(t + tau, n)]);
    return UnimodSequence(std::move(out));
}

UnimodSequence scale(const UnimodSequence& s, const Phase& c) {
    std::vector<Phase> out;
    out.reserve(static_cast<std::size_t>(s.length()));
    for (const Phase& p : s.entries()) out.push_back(p * c);
    return UnimodSequence(std::move(out));
}

std::optional<ShiftWitness> equal_up_to_shift(const UnimodSequence& s, const UnimodSequence& t,
                                              bool allow_phase) {
    const std::int64_t n = s.length();
    if (t.length() != n) throw PreconditionError("equal_up_to_shift: length mismatch");
    for (std::int64_t tau = 0; tau < n; ++tau) {
        // t(x) = c * s(x + tau); c is pinned by x = 0.
        const Phase c = allow_phase ? t[0] * s[mod(tau, n)].conj() : Phase{};
        bool match = true;
        for (std::int64_t x = 0; x < n && match; ++x) {
            match = phases_match(t[x], c * s[mod(x + tau, n)]);
        }
        if (match) return ShiftWitness{tau, c};
    }
    return std::nullopt;
}

}  // namespace laz
