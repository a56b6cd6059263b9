#include "perank/automatic.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "perank/errors.hpp"
#include "perank/numtheory.hpp"

namespace perank {

namespace {

// Interns ell-term value tuples. Kernels are recomputed once per
// enumerated sequence in the exhaustive sweeps, so tuples whose entries
// span a small value range are packed into one machine word (every
// kernel tuple draws its values from the base period).
class TupleIndex {
  public:
    explicit TupleIndex(const PeriodicSequence& s) {
        std::int64_t lo = s.period().front(), hi = lo;
        for (std::int64_t v : s.period()) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        bias_ = lo;
        const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        bits_ = std::max(1, static_cast<int>(std::bit_width(span)));
        packable_ = static_cast<std::uint64_t>(s.ell()) * static_cast<std::uint64_t>(bits_) <= 64;
    }

    // Returns the index of t, inserting it if new.
    std::pair<std::size_t, bool> intern(const std::vector<std::int64_t>& t) {
        if (packable_) {
            std::uint64_t key = 0;
            for (std::size_t i = 0; i < t.size(); ++i)
                key |= (static_cast<std::uint64_t>(t[i]) - static_cast<std::uint64_t>(bias_))
                       << (static_cast<std::size_t>(bits_) * i);
            auto [it, inserted] = packed_.emplace(key, packed_.size());
            return {it->second, inserted};
        }
        auto [it, inserted] = general_.emplace(t, general_.size());
        return {it->second, inserted};
    }

  private:
    std::int64_t bias_ = 0;
    int bits_ = 1;
    bool packable_ = false;
    std::unordered_map<std::uint64_t, std::size_t> packed_;
    std::map<std::vector<std::int64_t>, std::size_t> general_;
};

std::vector<std::int64_t> value_tuple(const PeriodicSequence& s, std::int64_t c, std::int64_t r) {
    const std::int64_t L = s.ell();
    std::vector<std::int64_t> t(static_cast<std::size_t>(L));
    for (std::int64_t n = 0; n < L; ++n) t[static_cast<std::size_t>(n)] = s.period()[static_cast<std::size_t>((c * n + r) % L)];
    return t;
}

std::int64_t pow_mod(std::int64_t k, std::int64_t e, std::int64_t m) {
    std::int64_t p = 1 % m;
    for (std::int64_t i = 0; i < e; ++i) p = (p * k) % m;
    return p;
}

// min(k^e, cap) without overflow.
std::int64_t pow_clamped(std::int64_t k, std::int64_t e, std::int64_t cap) {
    std::int64_t p = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (p >= cap) return cap;
        p *= k;
    }
    return std::min(p, cap);
}

void require_base(std::int64_t k) {
    if (k < 2) throw std::domain_error("base k must be at least 2");
}

}  // namespace

Kernel kernel(const PeriodicSequence& s, std::int64_t k) {
    require_base(k);
    const std::int64_t L = s.ell();
    Kernel ker{s, k, {}, {}, 0};
    TupleIndex index(s);

    auto add = [&](std::int64_t c, std::int64_t r) {
        std::vector<std::int64_t> tuple = value_tuple(s, c, r);
        auto [idx, inserted] = index.intern(tuple);
        if (inserted) {
            ker.elements.push_back(KernelElement{c, r, std::move(tuple)});
            ker.transitions.emplace_back(static_cast<std::size_t>(k), 0);
        }
        return idx;
    };

    add(1 % L, 0);
    for (std::size_t i = 0; i < ker.elements.size(); ++i) {
        const std::int64_t c = ker.elements[i].c;
        const std::int64_t r = ker.elements[i].r;
        for (std::int64_t d = 0; d < k; ++d)
            ker.transitions[i][static_cast<std::size_t>(d)] = add((c * k) % L, (c * d + r) % L);
    }
    return ker;
}

std::int64_t rank_automatic(const PeriodicSequence& s, std::int64_t k) {
    return static_cast<std::int64_t>(kernel(s, k).elements.size());
}

FunnelBasin funnel_basin(const PeriodicSequence& s, std::int64_t k) {
    require_base(k);
    const std::int64_t L = s.ell();
    const OrdPre op = L == 1 ? OrdPre{k, 1, 0, 1} : ord_pre(k, L);

    FunnelBasin fb;
    TupleIndex funnel_index(s);
    for (std::int64_t e = 0; e < op.pre; ++e) {
        const std::int64_t c = pow_mod(k, e, L);
        for (std::int64_t j = 0; j < pow_clamped(k, e, L); ++j)
            if (funnel_index.intern(value_tuple(s, c, j)).second) fb.funnel.push_back(KernelElement{c, j, value_tuple(s, c, j)});
    }
    TupleIndex basin_index(s);
    for (std::int64_t e = op.pre; e < op.pre + op.ord; ++e) {
        const std::int64_t c = pow_mod(k, e, L);
        for (std::int64_t j = 0; j < L; ++j)
            if (basin_index.intern(value_tuple(s, c, j)).second) fb.basin.push_back(KernelElement{c, j, value_tuple(s, c, j)});
    }
    return fb;
}

std::int64_t bound_B(std::int64_t k, std::int64_t ell) {
    require_base(k);
    if (ell < 2) throw std::domain_error("ell must be at least 2");
    const OrdPre op = ord_pre(k, ell);
    std::int64_t b = ell * op.ord;
    for (std::int64_t e = 0; e < op.pre; ++e) b += pow_clamped(k, e, ell);
    return b;
}

Dfao build_dfao(const PeriodicSequence& s, std::int64_t k) {
    const Kernel ker = kernel(s, k);
    Dfao d;
    d.base_k = k;
    d.initial = ker.initial;
    d.transitions = ker.transitions;
    d.outputs.reserve(ker.elements.size());
    for (const KernelElement& e : ker.elements) d.outputs.push_back(e.values[0]);
    return d;
}

std::vector<int> digits_lsd_first(std::int64_t n, std::int64_t k) {
    require_base(k);
    if (n < 0) throw std::domain_error("digit expansion needs n >= 0");
    std::vector<int> digits;
    while (n > 0) {
        digits.push_back(static_cast<int>(n % k));
        n /= k;
    }
    return digits;
}

std::int64_t run_dfao_digits(const Dfao& d, const std::vector<int>& digits) {
    std::size_t state = d.initial;
    for (int digit : digits) {
        if (digit < 0 || digit >= d.base_k) throw std::domain_error("digit out of range for the automaton base");
        state = d.transitions[state][static_cast<std::size_t>(digit)];
    }
    return d.outputs[state];
}

std::int64_t run_dfao(const Dfao& d, std::int64_t n) {
    return run_dfao_digits(d, digits_lsd_first(n, d.base_k));
}

std::size_t minimal_state_count(const Dfao& d) {
    const std::size_t n = d.outputs.size();
    // Initial partition by output value, then refine by successor classes
    // until stable.
    std::vector<std::size_t> cls(n);
    {
        std::map<std::int64_t, std::size_t> ids;
        for (std::size_t i = 0; i < n; ++i) cls[i] = ids.emplace(d.outputs[i], ids.size()).first->second;
    }
    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> ids;
        std::vector<std::size_t> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::size_t> sig{cls[i]};
            for (std::size_t succ : d.transitions[i]) sig.push_back(cls[succ]);
            next[i] = ids.emplace(std::move(sig), ids.size()).first->second;
        }
        const bool stable = ids.size() == static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end())) + 1;
        cls = std::move(next);
        if (stable) return ids.size();
    }
}

std::string dfao_to_dot(const Dfao& d) {
    std::string out = "digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n  __start [shape=point, label=\"\"];\n";
    for (std::size_t i = 0; i < d.outputs.size(); ++i)
        out += "  q" + std::to_string(i) + " [label=\"q" + std::to_string(i) + "/" + std::to_string(d.outputs[i]) + "\"];\n";
    out += "  __start -> q" + std::to_string(d.initial) + ";\n";
    for (std::size_t i = 0; i < d.transitions.size(); ++i) {
        // One edge per target, labeled with every digit that goes there.
        std::map<std::size_t, std::string> by_target;
        for (std::size_t digit = 0; digit < d.transitions[i].size(); ++digit) {
            std::string& label = by_target[d.transitions[i][digit]];
            if (!label.empty()) label += ",";
            label += std::to_string(digit);
        }
        for (const auto& [target, label] : by_target)
            out += "  q" + std::to_string(i) + " -> q" + std::to_string(target) + " [label=\"" + label + "\"];\n";
    }
    out += "}\n";
    return out;
}

PeriodicSequence witness_automatic(std::int64_t k, std::int64_t ell, std::int64_t d) {
    require_base(k);
    if (ell < 2) throw std::domain_error("ell must be at least 2");
    if (std::gcd(k, ell) != 1) throw std::domain_error("orbit witnesses need gcd(k, ell) = 1");
    const std::int64_t ord = ord_pre(k, ell).ord;
    if (d < 1 || ord % d != 0) throw std::domain_error("d must divide the multiplicative order of k mod ell");

    // Orbits of n -> k^d n on Z_ell, discovered in increasing order of
    // their minimal element; that makes the numbering {0} = 0, ... .
    const std::int64_t kd = pow_mod(k, d, ell);
    std::vector<std::int64_t> label(static_cast<std::size_t>(ell), -1);
    std::int64_t next = 0;
    for (std::int64_t n = 0; n < ell; ++n) {
        if (label[static_cast<std::size_t>(n)] >= 0) continue;
        for (std::int64_t m = n; label[static_cast<std::size_t>(m)] < 0; m = (kd * m) % ell) label[static_cast<std::size_t>(m)] = next;
        ++next;
    }

    PeriodicSequence w{std::move(label)};
    if (w.ell() != ell || rank_automatic(w, k) != d * ell)
        throw std::logic_error("orbit witness failed its rank verification");
    return w;
}

AutomaticMuggleReport muggle_report_automatic(std::int64_t k, std::int64_t ell) {
    require_base(k);
    if (ell < 2) throw std::domain_error("ell must be at least 2");
    if (std::gcd(k, ell) != 1)
        throw unsupported_error("no closed-form muggle characterization is known when gcd(k, ell) > 1; "
                                "use empirical enumeration instead");

    AutomaticMuggleReport rep;
    rep.k = k;
    rep.ell = ell;
    rep.coprime = true;
    const std::int64_t ord = ord_pre(k, ell).ord;
    rep.range_lo = ell;
    rep.range_hi = ell * ord;
    for (std::int64_t d : divisors(ord)) {
        rep.muggles.push_back(d * ell);
        rep.witnesses.emplace(d * ell, witness_automatic(k, ell, d));
    }
    std::set<std::int64_t> muggle_set(rep.muggles.begin(), rep.muggles.end());
    for (std::int64_t v = rep.range_lo; v <= rep.range_hi; ++v)
        if (!muggle_set.count(v)) rep.magics.push_back(v);
    return rep;
}

}  // namespace perank
