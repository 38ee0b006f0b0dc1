#include "perimal/quotient.hpp"

#include <algorithm>
#include <set>

#include "perimal/error.hpp"

namespace perimal {

uint64_t presentation_hash(const PresentedGroup& g) {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    for (const auto& name : g.generators) mix(name);
    for (const auto& r : g.relators) mix(render_word(r));
    return h;
}

Perm quotient_eval(const FiniteQuotient& q, const Word& w) {
    Perm out(q.degree);
    for (const auto& l : w) {
        auto it = q.images.find(l.gen);
        if (it == q.images.end())
            fail(errc::unknown_generator, "quotient has no image for " + l.gen);
        out = out * it->second.pow(l.exp);
    }
    return out;
}

std::vector<uint64_t> subgroup_closure(const std::vector<Perm>& gens, int degree) {
    std::set<uint64_t> seen;
    std::vector<Perm> frontier{Perm(degree)};
    seen.insert(Perm(degree).pack());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier)
            for (const Perm& g : gens) {
                Perm q = p * g;
                if (seen.insert(q.pack()).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

namespace {

struct Search {
    const PresentedGroup& g;
    size_t n;
    std::map<std::string, size_t> gen_index;
    // relator letters as (generator index, exponent)
    std::vector<std::vector<std::pair<size_t, i64>>> rels;
    std::vector<std::vector<size_t>> rel_support;   // unique gen indices
    std::vector<std::vector<size_t>> rels_of_gen;
    std::vector<size_t> schedule;                   // generators to enumerate

    int degree = 0;
    std::vector<Perm> img;
    std::vector<bool> assigned;
    std::vector<size_t> unassigned_in_rel;

    uint64_t source = 0;
    size_t count = 0;
    std::vector<FiniteQuotient>* out = nullptr;
    std::set<std::vector<uint64_t>>* seen = nullptr;

    explicit Search(const PresentedGroup& gr) : g(gr), n(gr.generators.size()) {
        for (size_t i = 0; i < n; ++i) gen_index[g.generators[i]] = i;
        rels_of_gen.resize(n);
        for (const Word& r : g.relators) {
            std::vector<std::pair<size_t, i64>> letters;
            std::set<size_t> support;
            for (const auto& l : r) {
                auto it = gen_index.find(l.gen);
                if (it == gen_index.end())
                    fail(errc::unknown_generator, "relator uses unknown generator " + l.gen);
                letters.push_back({it->second, l.exp});
                support.insert(it->second);
            }
            const size_t ri = rels.size();
            rels.push_back(std::move(letters));
            rel_support.push_back({support.begin(), support.end()});
            for (size_t gi : support) rels_of_gen[gi].push_back(ri);
        }
        source = presentation_hash(g);
        build_schedule();
    }

    // Forcing closure: a relator with every generator in `known` except one,
    // occurring exactly once with exponent +-1, determines that generator.
    void closure(std::vector<bool>& known) const {
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t ri = 0; ri < rels.size(); ++ri) {
                size_t missing = n;
                bool unique = true;
                for (size_t gi : rel_support[ri])
                    if (!known[gi]) {
                        if (missing != n) unique = false;
                        missing = gi;
                    }
                if (missing == n || !unique) continue;
                i64 occurrences = 0;
                bool unit = true;
                for (const auto& [gi, e] : rels[ri])
                    if (gi == missing) {
                        ++occurrences;
                        if (e != 1 && e != -1) unit = false;
                    }
                if (occurrences == 1 && unit && !known[missing]) {
                    known[missing] = true;
                    grew = true;
                }
            }
        }
    }

    // Greedy elimination ordering: enumerate the generator whose addition to
    // the known set forces the most other generators; ties fall back to
    // presentation order.  Precomputed once, independent of degree.
    void build_schedule() {
        std::vector<bool> known(n, false);
        closure(known);
        auto all_known = [&]() {
            return std::all_of(known.begin(), known.end(), [](bool b) { return b; });
        };
        while (!all_known()) {
            size_t best = n;
            size_t best_gain = 0;
            for (size_t gi = 0; gi < n; ++gi) {
                if (known[gi]) continue;
                std::vector<bool> trial = known;
                trial[gi] = true;
                closure(trial);
                const size_t gain =
                    static_cast<size_t>(std::count(trial.begin(), trial.end(), true));
                if (best == n || gain > best_gain) {
                    best = gi;
                    best_gain = gain;
                }
            }
            schedule.push_back(best);
            known[best] = true;
            closure(known);
        }
    }

    Perm eval_relator(size_t ri) const {
        Perm p(degree);
        for (const auto& [gi, e] : rels[ri]) p = p * img[gi].pow(e);
        return p;
    }

    // Assign and check every relator this completes; returns false on a
    // violated relator (assignment stays in place for symmetric undo).
    bool do_assign(size_t gi, const Perm& p) {
        img[gi] = p;
        assigned[gi] = true;
        bool ok = true;
        for (size_t ri : rels_of_gen[gi]) {
            if (--unassigned_in_rel[ri] == 0 && ok)
                if (!eval_relator(ri).is_identity()) ok = false;
        }
        return ok;
    }

    void undo_assign(size_t gi) {
        assigned[gi] = false;
        for (size_t ri : rels_of_gen[gi]) ++unassigned_in_rel[ri];
    }

    // Solve relator ri for its single unassigned generator.
    bool force_from(size_t ri, size_t gi) {
        Perm prefix(degree), suffix(degree);
        i64 exp = 0;
        bool before = true;
        for (const auto& [gj, e] : rels[ri]) {
            if (gj == gi) {
                exp = e;
                before = false;
            } else if (before) {
                prefix = prefix * img[gj].pow(e);
            } else {
                suffix = suffix * img[gj].pow(e);
            }
        }
        Perm solved = prefix.inverse() * suffix.inverse();
        if (exp == -1) solved = solved.inverse();
        return do_assign(gi, solved);
    }

    // Propagate all available forcings; records assignments for the caller
    // to undo.  Returns false when a relator is violated.
    bool propagate(std::vector<size_t>& trail) {
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t ri = 0; ri < rels.size(); ++ri) {
                if (unassigned_in_rel[ri] != 1) continue;
                size_t missing = n;
                for (size_t gi : rel_support[ri])
                    if (!assigned[gi]) missing = gi;
                i64 occurrences = 0;
                bool unit = true;
                for (const auto& [gi, e] : rels[ri])
                    if (gi == missing) {
                        ++occurrences;
                        if (e != 1 && e != -1) unit = false;
                    }
                if (occurrences != 1 || !unit) continue;
                trail.push_back(missing);
                if (!force_from(ri, missing)) return false;
                grew = true;
            }
        }
        return true;
    }

    void accept() {
        bool nontrivial = false;
        for (size_t gi = 0; gi < n; ++gi)
            if (!img[gi].is_identity()) nontrivial = true;
        if (!nontrivial) return;
        // A global fixed point means this is a padded copy of a smaller
        // degree's quotient; skip it.
        for (int pt = 0; pt < degree; ++pt) {
            bool moved = false;
            for (size_t gi = 0; gi < n; ++gi)
                if (img[gi].apply(pt) != pt) moved = true;
            if (!moved) return;
        }
        if (!seen->insert(canonical_key()).second) return;
        FiniteQuotient q;
        q.degree = degree;
        q.source = source;
        for (size_t gi = 0; gi < n; ++gi) q.images[g.generators[gi]] = img[gi];
        out->push_back(std::move(q));
    }

    // Key invariant under simultaneous conjugation.  The first scheduled
    // generator's image is always a class representative, so conjugations
    // between two found homomorphisms lie in its centralizer.
    std::vector<uint64_t> canonical_key() const {
        std::vector<uint64_t> best;
        const Perm anchor = schedule.empty() ? Perm(degree) : img[schedule[0]];
        for (const Perm& s : all_perms(degree)) {
            if (!(s * anchor * s.inverse() == anchor)) continue;
            std::vector<uint64_t> key;
            key.reserve(n + 1);
            key.push_back(static_cast<uint64_t>(degree));
            const Perm si = s.inverse();
            for (size_t gi = 0; gi < n; ++gi) key.push_back((s * img[gi] * si).pack());
            if (best.empty() || key < best) best = std::move(key);
        }
        return best;
    }

    void run(size_t step) {
        if (out->size() >= count) return;
        std::vector<size_t> trail;
        if (propagate(trail)) {
            size_t next = n;
            for (size_t gi : schedule)
                if (!assigned[gi]) {
                    next = gi;
                    break;
                }
            if (next == n) {
                accept();
            } else {
                const bool anchored = !schedule.empty() && next == schedule[0];
                const auto& pool = anchored ? class_representatives(degree) : all_perms(degree);
                for (const Perm& cand : pool) {
                    if (out->size() >= count) break;
                    if (do_assign(next, cand)) run(step + 1);
                    undo_assign(next);
                }
            }
        }
        for (auto it = trail.rbegin(); it != trail.rend(); ++it) undo_assign(*it);
    }

    void sweep(int d) {
        degree = d;
        img.assign(n, Perm(d));
        assigned.assign(n, false);
        unassigned_in_rel.clear();
        for (const auto& sup : rel_support) unassigned_in_rel.push_back(sup.size());
        // Relators with no generators (empty words) are identically satisfied.
        for (size_t ri = 0; ri < rels.size(); ++ri)
            if (rel_support[ri].empty()) unassigned_in_rel[ri] = 1;
        run(0);
    }
};

} // namespace

std::vector<FiniteQuotient> find_quotients(const PresentedGroup& g, int max_degree,
                                           size_t count, uint64_t seed) {
    (void)seed;  // enumeration is canonical; the seed is bookkeeping only
    if (max_degree > Perm::MAX_DEGREE)
        fail(errc::internal, "quotient degree cap exceeds " +
                                 std::to_string(Perm::MAX_DEGREE));
    std::vector<FiniteQuotient> out;
    if (count == 0 || g.generators.empty()) return out;
    std::set<std::vector<uint64_t>> seen;
    Search search(g);
    search.out = &out;
    search.seen = &seen;
    search.count = count;
    for (int d = 2; d <= max_degree && out.size() < count; ++d) search.sweep(d);
    return out;
}

namespace {

PresentedGroup companion_subgroup(const PresentedGroup& g, const FactorMeta& fm) {
    PresentedGroup c;
    c.generators.assign(g.generators.begin() + static_cast<long>(fm.gen_begin),
                        g.generators.begin() + static_cast<long>(fm.gen_end));
    std::set<std::string> names(c.generators.begin(), c.generators.end());
    for (const auto& r : g.relators) {
        if (r.empty()) continue;
        bool inside = true;
        for (const auto& l : r)
            if (!names.count(l.gen)) { inside = false; break; }
        if (inside) c.relators.push_back(r);
    }
    if (fm.torus) c.structure = *fm.torus; else c.structure = WirtingerMeta{};
    for (const auto& gen : c.generators) {
        auto it = g.abelianization.find(gen);
        if (it != g.abelianization.end()) c.abelianization[gen] = it->second;
    }
    return c;
}

Perm pad_perm(const Perm& p, int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i < p.degree() ? p.apply(i) : i;
    return Perm(n, im);
}

// Cycles sorted by length descending, then by smallest element.
std::vector<std::vector<int>> raw_cycles(const Perm& p) {
    int n = p.degree();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = p.apply(j)) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });
    return out;
}

// sigma with sigma a sigma^-1 == b; a and b share a cycle type.
Perm conjugator_to(const Perm& a, const Perm& b) {
    int n = a.degree();
    auto ca = raw_cycles(a), cb = raw_cycles(b);
    std::vector<int> im(n);
    for (size_t k = 0; k < ca.size(); ++k)
        for (size_t j = 0; j < ca[k].size(); ++j) im[ca[k][j]] = cb[k][j];
    return Perm(n, im);
}

const Perm& class_rep_of(const Perm& p) {
    auto ct = p.cycle_type();
    for (const auto& r : class_representatives(p.degree()))
        if (r.cycle_type() == ct) return r;
    fail(errc::internal, "conjugacy class without representative");
}

const std::vector<Perm>& centralizer_of_rep(const Perm& rep) {
    static std::map<uint64_t, std::vector<Perm>> cache;
    uint64_t key = static_cast<uint64_t>(rep.degree()) << 56 | rep.pack();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Perm> cz;
    for (const auto& s : all_perms(rep.degree()))
        if (s * rep == rep * s) cz.push_back(s);
    return cache.emplace(key, std::move(cz)).first->second;
}

// Same invariant as Search::canonical_key, anchored at the first generator.
std::vector<uint64_t> lift_key(int degree, const std::vector<Perm>& images) {
    const Perm& rep = class_rep_of(images[0]);
    Perm s0 = conjugator_to(images[0], rep);
    Perm s0i = s0.inverse();
    std::vector<Perm> base;
    base.reserve(images.size());
    for (const Perm& p : images) base.push_back(s0 * p * s0i);
    std::vector<uint64_t> best;
    for (const Perm& cz : centralizer_of_rep(rep)) {
        Perm czi = cz.inverse();
        std::vector<uint64_t> key;
        key.reserve(base.size() + 1);
        key.push_back(static_cast<uint64_t>(degree));
        for (const Perm& p : base) key.push_back((cz * p * czi).pack());
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

} // namespace

std::vector<FiniteQuotient> cable_quotients(const PresentedGroup& g, int max_degree,
                                            size_t count) {
    if (max_degree > Perm::MAX_DEGREE)
        fail(errc::internal, "quotient degree cap exceeds " +
                                 std::to_string(Perm::MAX_DEGREE));
    const auto* cm = std::get_if<CableMeta>(&g.structure);
    if (cm == nullptr)
        fail(errc::internal, "cable quotient enumeration needs a cable presentation");
    const FactorMeta& fm = cm->companion;
    if (g.generators.size() != fm.gen_end + 3)
        fail(errc::internal, "cable presentation has unexpected generators");
    const std::string& qn = g.generators[fm.gen_end];
    const std::string& cn = g.generators[fm.gen_end + 1];
    const std::string& hn = g.generators[fm.gen_end + 2];

    PresentedGroup comp = companion_subgroup(g, fm);
    static std::map<std::pair<uint64_t, int>, std::vector<FiniteQuotient>> comp_cache;
    auto ckey = std::make_pair(presentation_hash(comp), max_degree);
    auto cit = comp_cache.find(ckey);
    if (cit == comp_cache.end())
        cit = comp_cache.emplace(ckey, find_quotients(comp, max_degree, SIZE_MAX, 0)).first;
    const std::vector<FiniteQuotient>& comp_quots = cit->second;

    uint64_t hash = presentation_hash(g);
    std::set<std::vector<uint64_t>> seen;
    std::vector<FiniteQuotient> out;

    auto emit = [&](FiniteQuotient&& fq) {
        for (const auto& r : g.relators)
            if (!quotient_eval(fq, r).is_identity()) return;
        std::vector<Perm> images;
        images.reserve(g.generators.size());
        for (const auto& gen : g.generators) images.push_back(fq.images.at(gen));
        if (seen.insert(lift_key(fq.degree, images)).second) out.push_back(std::move(fq));
    };

    for (int n = 2; n <= max_degree && out.size() < count; ++n) {
        // Trivial companion layer: hbar = cbar = id, qbar^a = id; the global
        // fixed point filter leaves only fixed-point-free qbar.
        Perm id(n);
        for (const Perm& qb : all_perms(n)) {
            if (out.size() >= count) break;
            if (qb.is_identity() || !qb.pow(cm->a).is_identity()) continue;
            bool fp = false;
            for (int i = 0; i < n; ++i)
                if (qb.apply(i) == i) { fp = true; break; }
            if (fp) continue;
            FiniteQuotient fq;
            fq.degree = n;
            fq.source = hash;
            for (const auto& gen : comp.generators) fq.images[gen] = id;
            fq.images[qn] = qb;
            fq.images[cn] = id;
            fq.images[hn] = id;
            emit(std::move(fq));
        }
        // Companion quotients of degree m <= n padded with fixed points; qbar
        // ranges over solutions of qbar^a = hbar^-b in the centralizer of hbar.
        for (const FiniteQuotient& cq : comp_quots) {
            if (cq.degree > n || out.size() >= count) continue;
            FiniteQuotient base;
            base.degree = n;
            base.source = hash;
            for (const auto& [gen, img] : cq.images) base.images[gen] = pad_perm(img, n);
            Perm mu = quotient_eval(base, fm.mu);
            Perm la = quotient_eval(base, fm.lambda);
            Perm hb = mu.pow(cm->b) * la.pow(cm->a);
            Perm cb = mu.pow(cm->s) * la.pow(cm->r);
            Perm target = hb.pow(-cm->b);
            for (const Perm& qb : all_perms(n)) {
                if (out.size() >= count) break;
                if (!(qb * hb == hb * qb) || qb.pow(cm->a) != target) continue;
                bool global_fp = false;
                for (int i = 0; i < n && !global_fp; ++i) {
                    if (qb.apply(i) != i) continue;
                    bool all = true;
                    for (const auto& [gen, img] : base.images)
                        if (img.apply(i) != i) { all = false; break; }
                    global_fp = all;
                }
                if (global_fp) continue;
                FiniteQuotient fq = base;
                fq.images[qn] = qb;
                fq.images[cn] = cb;
                fq.images[hn] = hb;
                emit(std::move(fq));
            }
        }
    }
    return out;
}

} // namespace perimal
