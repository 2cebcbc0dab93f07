#include "untwist/engine/engine.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "untwist/classical/classical.hpp"
#include "untwist/floer/floer.hpp"
#include "untwist/floer/upsilon.hpp"
#include "untwist/forms/forms.hpp"

namespace untwist {

const char* const kConventionNote =
    "sigma(T(2,3)) = -2; an l^- twist requires sigma_{r/l} in {-2r(l-r), -2r(l-r)+2}, "
    "l^+ the negated set; V-sequence checks for l^+ run on the mirror";

namespace {

const std::optional<VSequence>& side_v(const KnotRecord& k, Sign side) {
    return side == Sign::minus ? k.v_seq : k.v_seq_mirror;
}

std::optional<std::int64_t> side_tau(const KnotRecord& k, Sign side) {
    if (!k.tau) return std::nullopt;
    return side == Sign::minus ? *k.tau : -*k.tau;
}

void record(TwistVerdict& v, const std::string& name, const ObstructionResult& r) {
    if (r.obstructed())
        v.reasons.push_back({name, r.detail});
    else if (r.inconclusive)
        v.inconclusive.push_back({name, r.detail});
}

ObstructionResult alternating_check(const KnotRecord& k, const TwistIndex& idx) {
    if (!(k.alternating || k.thin)) return ObstructionResult::not_applicable("not alternating or thin");
    TwistSet allowed = alternating_allowed(k.signature);
    std::string d = "sigma = " + std::to_string(k.signature) + " allows " + to_string(allowed);
    if (allowed.count(idx)) return ObstructionResult::pass(d);
    return ObstructionResult::fail(d);
}

ObstructionResult rank_checks(const KnotRecord& k, const TwistIndex& idx) {
    std::vector<std::int64_t> qs;
    for (const auto& [q, _] : k.branched_ranks) qs.push_back(q);
    if (qs.empty()) qs.push_back(2);
    ObstructionResult last = ObstructionResult::not_applicable("no branched-cover data");
    for (std::int64_t q : qs) {
        ObstructionResult r = branched_rank_check(k, idx, q);
        if (r.obstructed()) return r;
        if (r.applicable) last = r;
    }
    return last;
}

// Returns the forced-value check and fills the partial data handed to the partner system.
ObstructionResult forced_values(const KnotRecord& k, const TwistIndex& idx, PartialV& pv) {
    const auto& v = side_v(k, idx.sign);
    if (v) {
        pv = PartialV::from(*v);
    } else {
        pv.zero_from = k.genus;
    }
    if (idx.l == 0) return ObstructionResult::not_applicable("l = 0");
    auto req = required_v(idx.l);
    if (!v) {
        for (const auto& [i, val] : req) pv.known[i] = val;
        return ObstructionResult::insufficient("insufficient data: V-sequence unknown, forced values passed on");
    }
    std::vector<std::string> bad;
    for (const auto& [i, val] : req)
        if ((*v)[i] != val)
            bad.push_back("V_" + std::to_string(i) + " = " + std::to_string((*v)[i]) + " but " + std::to_string(val) +
                          " is forced");
    if (bad.empty()) return ObstructionResult::pass("forced values hold");
    std::string d = bad.front();
    for (std::size_t i = 1; i < bad.size(); ++i) d += "; " + bad[i];
    return ObstructionResult::fail(d);
}

std::optional<PLFunction> side_upsilon(const KnotRecord& k, Sign side) {
    if (!k.upsilon) return std::nullopt;
    return side == Sign::minus ? *k.upsilon : -*k.upsilon;
}

}  // namespace

NuBounds nu_bounds(const KnotRecord& k, Sign side, const Config& config) {
    if (const auto& v = side_v(k, side)) return {v->nu_plus(), v->nu_plus(), true, "V-sequence"};
    NuBounds b;
    auto tau = side_tau(k, side);
    b.lo = tau ? std::max<std::int64_t>(*tau, 0) : 0;
    if (k.genus4) {
        b.hi = *k.genus4;
        b.source = "tau <= nu+ <= g4";
    } else {
        b.hi = std::max(k.genus, b.lo);
        b.source = tau ? "tau <= nu+ <= g" : "0 <= nu+ <= g";
    }
    (void)config;
    return b;
}

TwistSet candidates(const KnotRecord& k, const Config& config) {
    TwistSet out{{0, Sign::minus}, {0, Sign::plus}, {1, Sign::minus}, {1, Sign::plus}};
    for (Sign side : {Sign::minus, Sign::plus}) {
        NuBounds b = nu_bounds(k, side, config);
        for (std::int64_t l : l_interval(b.lo, b.hi))
            if (b.exact || l <= config.max_l) out.insert({l, side});
    }
    for (const auto& t : k.known_indices) out.insert(t);
    return out;
}

TwistVerdict evaluate_index(const KnotRecord& k, const TwistIndex& idx) {
    TwistVerdict v;
    v.index = idx;
    record(v, "alternating", alternating_check(k, idx));
    record(v, "arf", arf_check(k, idx));
    record(v, "signature", signature_twist_check(k, idx));
    record(v, "branched_rank", rank_checks(k, idx));

    PartialV pv;
    record(v, "forced_v", forced_values(k, idx, pv));
    record(v, "partner_v", partner_v_check(pv, idx.l));
    if (idx.l >= 1) {
        if (auto ups = side_upsilon(k, idx.sign))
            record(v, "upsilon", upsilon_check(*ups, idx.l, k.genus > 0 ? std::optional(k.genus) : std::nullopt));
        else
            record(v, "upsilon", ObstructionResult::insufficient("insufficient data: Upsilon unknown"));
    }
    record(v, "intersection_form", intersection_form_check(k, idx));
    record(v, "linking_form", linking_form_check(k, idx));
    record(v, "d_invariant", d_invariant_check(k, idx));
    for (const auto& e : k.external_obstructions)
        if (e.index == idx) v.reasons.push_back({"external", e.reason});

    if (k.known_indices.count(idx))
        v.status = Status::known;
    else
        v.status = v.reasons.empty() ? Status::possible : Status::obstructed;
    return v;
}

AnalysisReport analyze(const KnotRecord& k, const Config& config) {
    AnalysisReport rep;
    rep.knot = k.name;
    rep.convention_note = kConventionNote;
    TwistSet cands = candidates(k, config);
    std::vector<TwistIndex> order(cands.begin(), cands.end());
    rep.verdicts.resize(order.size());
    if (config.parallel) {
        std::vector<std::future<TwistVerdict>> jobs;
        for (const auto& idx : order) jobs.push_back(std::async(std::launch::async, evaluate_index, std::cref(k), idx));
        for (std::size_t i = 0; i < jobs.size(); ++i) rep.verdicts[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < order.size(); ++i) rep.verdicts[i] = evaluate_index(k, order[i]);
    }

    for (const auto& v : rep.verdicts) {
        if (v.status == Status::known && !v.reasons.empty())
            throw CalibrationError("knot " + k.name + ": known index " + v.index.str() + " is obstructed by " +
                                   v.reasons.front().check + " (" + v.reasons.front().detail + ")");
        if (v.status == Status::known) rep.known.insert(v.index);
        if (v.status == Status::possible) rep.possible.insert(v.index);
    }

    TwistSet alive = rep.known;
    alive.insert(rep.possible.begin(), rep.possible.end());
    for (const auto& [a, b] : gcd_conflicts(alive))
        rep.notes.push_back("gcd: " + a.str() + " and " + b.str() + " cannot both be unknotting indices");
    for (const auto& t : alive) {
        if (t.l < 1) continue;
        TwistIndex partner{t.l + 1, t.sign == Sign::minus ? Sign::plus : Sign::minus};
        if (!alive.count(partner)) continue;
        std::int64_t bound = genus_pair_bound(t.l);
        if (k.genus < bound)
            rep.notes.push_back("genus: " + t.str() + " and " + partner.str() + " together need genus >= " +
                                std::to_string(bound) + ", but g = " + std::to_string(k.genus));
    }

    if (k.v_seq && k.v_seq_mirror) {
        if (alive.size() > 6)
            throw std::logic_error("knot " + k.name + ": more than six surviving indices " + to_string(alive));
        const TwistSet six{{0, Sign::minus}, {0, Sign::plus}, {1, Sign::minus},
                           {1, Sign::plus},  {2, Sign::minus}, {2, Sign::plus}};
        if (alive.size() == 6 && alive != six)
            throw std::logic_error("knot " + k.name + ": six surviving indices other than {0,1,2}^+-");
    }
    return rep;
}

}  // namespace untwist
