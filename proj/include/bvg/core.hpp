#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bvg {

// Thrown by exhaustive operations when the requested enumeration would
// exceed the configured bound. The message states the bound.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(std::uint64_t required, std::uint64_t cap)
        : std::runtime_error("enumeration of " + std::to_string(required) +
                             " states exceeds cap " + std::to_string(cap)),
          required_(required),
          cap_(cap) {}
    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t(1) << 20;

inline void check_cap(std::uint64_t required, std::uint64_t cap) {
    if (required > cap) throw cap_exceeded(required, cap);
}

// Dimensions of a binary aggregation problem: an odd number (>= 3) of
// voters deciding a set of binary issues. Voter and issue indices are
// 0-based internally; all external formats are 1-based.
struct structure {
    int voters = 0;
    int issues = 0;

    structure() = default;
    structure(int n, int m) : voters(n), issues(m) {
        if (n < 3 || n % 2 == 0)
            throw std::invalid_argument("structure: voter count must be odd and >= 3");
        if (n > 25) throw std::invalid_argument("structure: voter count must be <= 25");
        if (m < 1) throw std::invalid_argument("structure: issue count must be >= 1");
        if (m > 20) throw std::invalid_argument("structure: issue count must be <= 20");
        if (n * m > 62)
            throw std::invalid_argument("structure: voters*issues must be <= 62");
    }

    std::uint64_t profile_space() const { return std::uint64_t(1) << (voters * issues); }
    std::uint32_t ballot_space() const { return std::uint32_t(1) << issues; }
    int majority_threshold() const { return (voters + 1) / 2; }

    bool operator==(const structure&) const = default;
};

// A yes/no stance on every issue. Issue 0 occupies the most significant of
// the m bits, so numeric order on `bits` equals the left-to-right reading
// of the printed bit string.
class ballot {
public:
    ballot() = default;
    ballot(std::uint32_t bits, int issues) : bits_(bits), issues_(issues) {
        if (issues < 1 || issues > 31) throw std::invalid_argument("ballot: bad issue count");
        if (bits >> issues) throw std::invalid_argument("ballot: bits out of range");
    }

    static ballot zeros(int issues) { return ballot(0, issues); }
    static ballot ones(int issues) {
        return ballot((std::uint32_t(1) << issues) - 1, issues);
    }
    static ballot from_bits(std::initializer_list<int> values) {
        std::uint32_t b = 0;
        for (int v : values) b = (b << 1) | (v ? 1u : 0u);
        return ballot(b, static_cast<int>(values.size()));
    }
    // Accepts "101" or "1 0 1".
    static ballot parse(const std::string& text, int issues) {
        std::uint32_t b = 0;
        int seen = 0;
        for (std::size_t pos = 0; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c == ' ' || c == '\t' || c == ',') continue;
            if (c != '0' && c != '1')
                throw std::invalid_argument("ballot: unexpected character '" +
                                            std::string(1, c) + "' at position " +
                                            std::to_string(pos));
            b = (b << 1) | (c == '1' ? 1u : 0u);
            ++seen;
        }
        if (seen != issues)
            throw std::invalid_argument("ballot: expected " + std::to_string(issues) +
                                        " bits, got " + std::to_string(seen));
        return ballot(b, issues);
    }

    std::uint32_t bits() const { return bits_; }
    int issues() const { return issues_; }

    bool bit(int issue) const { return (bits_ >> (issues_ - 1 - issue)) & 1u; }

    ballot with_bit(int issue, bool value) const {
        std::uint32_t mask = std::uint32_t(1) << (issues_ - 1 - issue);
        return ballot(value ? (bits_ | mask) : (bits_ & ~mask), issues_);
    }

    std::string to_string() const {
        std::string s;
        for (int j = 0; j < issues_; ++j) s += bit(j) ? '1' : '0';
        return s;
    }
    std::string to_spaced_string() const {
        std::string s;
        for (int j = 0; j < issues_; ++j) {
            if (j) s += ' ';
            s += bit(j) ? '1' : '0';
        }
        return s;
    }

    bool operator==(const ballot&) const = default;
    auto operator<=>(const ballot&) const = default;

private:
    std::uint32_t bits_ = 0;
    int issues_ = 0;
};

// Flips every bit.
inline ballot inverse_ballot(const ballot& b) {
    std::uint32_t mask = (std::uint32_t(1) << b.issues()) - 1;
    return ballot(~b.bits() & mask, b.issues());
}

// A subset of the voters, voter i on bit i. Ascending mask order is the
// canonical iteration order for witnesses and scans.
class coalition {
public:
    coalition() = default;
    coalition(std::uint32_t mask, int voters) : mask_(mask), voters_(voters) {
        if (voters < 1 || voters > 31) throw std::invalid_argument("coalition: bad voter count");
        if (mask >> voters) throw std::invalid_argument("coalition: member out of range");
    }

    static coalition empty(int voters) { return coalition(0, voters); }
    static coalition full(int voters) {
        return coalition((std::uint32_t(1) << voters) - 1, voters);
    }
    static coalition of(std::initializer_list<int> members_1based, int voters) {
        std::uint32_t m = 0;
        for (int v : members_1based) {
            if (v < 1 || v > voters) throw std::invalid_argument("coalition: voter out of range");
            m |= std::uint32_t(1) << (v - 1);
        }
        return coalition(m, voters);
    }

    std::uint32_t mask() const { return mask_; }
    int voters() const { return voters_; }
    int size() const { return __builtin_popcount(mask_); }
    bool contains(int voter) const { return (mask_ >> voter) & 1u; }
    bool empty_set() const { return mask_ == 0; }

    coalition without(int voter) const {
        return coalition(mask_ & ~(std::uint32_t(1) << voter), voters_);
    }
    coalition complement() const {
        std::uint32_t all = (std::uint32_t(1) << voters_) - 1;
        return coalition(~mask_ & all, voters_);
    }
    bool subset_of(const coalition& o) const { return (mask_ & ~o.mask_) == 0; }

    std::vector<int> members() const {  // 0-based
        std::vector<int> out;
        for (int i = 0; i < voters_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    std::string to_string() const {  // 1-based, e.g. "{1,3}"
        std::string s = "{";
        bool first = true;
        for (int i = 0; i < voters_; ++i) {
            if (!contains(i)) continue;
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const coalition&) const = default;
    auto operator<=>(const coalition&) const = default;

private:
    std::uint32_t mask_ = 0;
    int voters_ = 0;
};

// One ballot per voter, packed voter-major into a single code: voter 0's
// ballot occupies the most significant m-bit block. Numeric order on the
// code is the canonical profile order everywhere (enumeration, witness
// selection, report output).
class profile {
public:
    profile() = default;
    profile(std::uint64_t code, const structure& s)
        : code_(code), voters_(s.voters), issues_(s.issues) {
        if (s.voters * s.issues < 62 && (code >> (s.voters * s.issues)))
            throw std::invalid_argument("profile: code out of range");
    }
    profile(const std::vector<ballot>& ballots, const structure& s)
        : voters_(s.voters), issues_(s.issues) {
        if (static_cast<int>(ballots.size()) != s.voters)
            throw std::invalid_argument("profile: expected " + std::to_string(s.voters) +
                                        " ballots, got " + std::to_string(ballots.size()));
        for (const ballot& b : ballots) {
            if (b.issues() != s.issues)
                throw std::invalid_argument("profile: ballot issue count mismatch");
            code_ = (code_ << s.issues) | b.bits();
        }
    }

    static profile unanimous(const ballot& b, const structure& s) {
        std::uint64_t code = 0;
        for (int i = 0; i < s.voters; ++i) code = (code << s.issues) | b.bits();
        return profile(code, s);
    }
    // Accepts "101 110 000" or "101110000".
    static profile parse(const std::string& text, const structure& s) {
        std::string flat;
        for (char c : text)
            if (c != ' ' && c != '\t' && c != ',') flat += c;
        if (static_cast<int>(flat.size()) != s.voters * s.issues)
            throw std::invalid_argument("profile: expected " +
                                        std::to_string(s.voters * s.issues) + " bits, got " +
                                        std::to_string(flat.size()));
        std::uint64_t code = 0;
        for (std::size_t pos = 0; pos < flat.size(); ++pos) {
            char c = flat[pos];
            if (c != '0' && c != '1')
                throw std::invalid_argument("profile: unexpected character '" +
                                            std::string(1, c) + "' at position " +
                                            std::to_string(pos));
            code = (code << 1) | (c == '1' ? 1u : 0u);
        }
        return profile(code, s);
    }

    std::uint64_t code() const { return code_; }
    int voters() const { return voters_; }
    int issues() const { return issues_; }
    structure dims() const { return structure(voters_, issues_); }

    ballot ballot_of(int voter) const {
        std::uint32_t bits = static_cast<std::uint32_t>(
            (code_ >> ((voters_ - 1 - voter) * issues_)) & ((std::uint64_t(1) << issues_) - 1));
        return ballot(bits, issues_);
    }

    profile with_ballot(int voter, const ballot& b) const {
        int shift = (voters_ - 1 - voter) * issues_;
        std::uint64_t mask = ((std::uint64_t(1) << issues_) - 1) << shift;
        std::uint64_t code = (code_ & ~mask) | (std::uint64_t(b.bits()) << shift);
        profile p;
        p.code_ = code;
        p.voters_ = voters_;
        p.issues_ = issues_;
        return p;
    }

    std::string to_string() const {  // "101 110 000"
        std::string s;
        for (int i = 0; i < voters_; ++i) {
            if (i) s += ' ';
            s += ballot_of(i).to_string();
        }
        return s;
    }
    std::string to_flat_string() const {  // "101110000", the wire form
        std::string s;
        for (int i = 0; i < voters_; ++i) s += ballot_of(i).to_string();
        return s;
    }

    bool operator==(const profile&) const = default;
    auto operator<=>(const profile&) const = default;

private:
    std::uint64_t code_ = 0;
    int voters_ = 0;
    int issues_ = 0;
};

// The set of voters accepting `issue` in `p`.
inline coalition acceptor_set(const profile& p, int issue) {
    if (issue < 0 || issue >= p.issues())
        throw std::invalid_argument("acceptor_set: issue out of range");
    std::uint32_t mask = 0;
    for (int i = 0; i < p.voters(); ++i)
        if (p.ballot_of(i).bit(issue)) mask |= std::uint32_t(1) << i;
    return coalition(mask, p.voters());
}

// Bitwise complement of every ballot in the profile.
inline profile inverse_profile(const profile& p) {
    structure s = p.dims();
    std::uint64_t all = s.profile_space() - 1;
    return profile(~p.code() & all, s);
}

}  // namespace bvg
