#include "kohnert/verify.hpp"

#include "kohnert/crystal.hpp"
#include "kohnert/error.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/tableau.hpp"
#include "kohnert/unlock.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace kohnert {

namespace {

std::string show(const LabeledDiagram& t)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const Entry& e : t.entries()) {
        if (!first)
            os << ' ';
        first = false;
        os << '(' << e.cell.row << ',' << e.cell.col << ")=" << e.label;
    }
    os << '}';
    return os.str();
}

std::string show(const Diagram& d)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const Cell& c : d.cells()) {
        if (!first)
            os << ' ';
        first = false;
        os << '(' << c.row << ',' << c.col << ')';
    }
    os << '}';
    return os.str();
}

std::string show(const std::optional<LabeledDiagram>& t)
{
    return t ? show(*t) : std::string("0");
}

std::string show(const std::optional<Diagram>& d)
{
    return d ? show(*d) : std::string("0");
}

int colors(const Composition& a)
{
    return static_cast<int>(a.size()) - 1;
}

/// The moved cell of one rectification step, or nullopt.
std::optional<Cell> pushed_cell(const Diagram& before, const std::optional<Diagram>& after)
{
    if (!after)
        return std::nullopt;
    for (const Cell& c : before.cells())
        if (!after->contains(c))
            return c;
    return std::nullopt;
}

/// Columns of string `label`.
std::set<int> string_columns(const LabeledDiagram& t, int label)
{
    std::set<int> cols;
    for (const Entry& e : t.entries())
        if (e.label == label)
            cols.insert(e.cell.col);
    return cols;
}

/// Labels carried by the nonzero parts, in order.
std::vector<int> present_labels(const Composition& a)
{
    std::vector<int> labels;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0)
            labels.push_back(static_cast<int>(i) + 1);
    return labels;
}

} // namespace

const std::vector<Composition>& spot_compositions()
{
    static const std::vector<Composition> spots{
        {1, 0, 3, 0, 3, 2}, {0, 3, 4}, {1, 0, 2, 1}, {0, 3, 2}, {0, 2, 3},
    };
    return spots;
}

std::vector<Composition> compositions_in(const SweepRange& range)
{
    std::vector<Composition> out;
    for (int len = 1; len <= range.max_length; ++len) {
        std::vector<int> parts(len, 0);
        while (true) {
            int total = 0;
            for (int p : parts)
                total += p;
            if (!range.max_size || total <= *range.max_size)
                out.emplace_back(parts);
            int pos = len - 1;
            while (pos >= 0 && parts[pos] == range.max_part)
                parts[pos--] = 0;
            if (pos < 0)
                break;
            ++parts[pos];
        }
    }
    if (range.include_spots) {
        std::set<Composition> seen(out.begin(), out.end());
        for (const Composition& a : spot_compositions())
            if (seen.insert(a).second)
                out.push_back(a);
    }
    return out;
}

VerificationReport run_sweep(std::string_view name, const Checker& checker, const SweepRange& range,
                             unsigned threads)
{
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Composition> comps = compositions_in(range);
    std::vector<std::optional<std::string>> results(comps.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < comps.size(); k = next++) {
            try {
                results[k] = checker(comps[k]);
            } catch (const TheoremViolation& e) {
                results[k] = std::string("fault: ") + e.what();
            } catch (const std::exception& e) {
                results[k] = std::string("error: ") + e.what();
            }
        }
    };
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, comps.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < threads; ++w)
        pool.emplace_back(work);
    work();
    for (std::thread& t : pool)
        t.join();

    VerificationReport report;
    report.check = std::string(name);
    report.tested = comps.size();
    for (std::size_t k = 0; k < comps.size(); ++k)
        if (results[k])
            report.failures.push_back({comps[k], std::move(*results[k])});
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::optional<std::string> check_positivity(const Composition& a)
{
    Polynomial diff = key_polynomial(a) - lock_polynomial(a);
    for (const auto& [e, c] : diff.terms())
        if (c <= 0) {
            Polynomial term = Polynomial::monomial(e, c);
            return "coefficient " + c.str() + " on " + term.to_string() + " in key - lock";
        }
    return std::nullopt;
}

std::optional<std::string> check_injection(const Composition& a)
{
    std::vector<LabeledDiagram> keys = enumerate_kkt(a);
    std::unordered_set<LabeledDiagram> key_set(keys.begin(), keys.end());
    std::unordered_map<LabeledDiagram, LabeledDiagram> preimage;
    for (const LabeledDiagram& t : enumerate_lkt(a)) {
        UnlockTrace trace = apply_unlock(t, a);
        const LabeledDiagram& u = trace.output;
        if (!key_set.count(u))
            return "image " + show(u) + " of " + show(t) + " is not in KKT";
        if (weight(u.diagram()) != weight(t.diagram()))
            return "weight changed on " + show(t);
        if (content(u, static_cast<int>(a.size())) != a)
            return "content changed on " + show(t);
        auto [it, fresh] = preimage.emplace(u, t);
        if (!fresh)
            return show(it->second) + " and " + show(t) + " both map to " + show(u);
        if (replay(trace) != u)
            return "trace of " + show(t) + " does not replay";
    }
    return std::nullopt;
}

std::optional<std::string> check_intertwining(const Composition& a)
{
    for (const LabeledDiagram& t : enumerate_lkt(a)) {
        const LabeledDiagram u = apply_unlock(t, a).output;
        for (int i = 1; i <= colors(a); ++i) {
            if (auto up = raise_lkt(t, a, i)) {
                auto lhs = apply_unlock(*up, a).output;
                auto rhs = raise_kkt(u, a, i);
                if (rhs != lhs)
                    return "U(e_" + std::to_string(i) + " T) = " + show(lhs) + " but e_" + std::to_string(i) +
                           " U(T) = " + show(rhs) + " for T = " + show(t);
            }
            if (auto down = lower_lkt(t, a, i)) {
                auto lhs = apply_unlock(*down, a).output;
                auto rhs = lower_kkt(u, a, i);
                if (rhs != lhs)
                    return "U(f_" + std::to_string(i) + " T) = " + show(lhs) + " but f_" + std::to_string(i) +
                           " U(T) = " + show(rhs) + " for T = " + show(t);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_connectivity(const Composition& a)
{
    for (CrystalKind kind : {CrystalKind::lock, CrystalKind::key}) {
        CrystalGraph g = crystal_graph(a, kind);
        if (!is_connected(g))
            return std::string(to_string(kind)) + " crystal is disconnected";
        const Polynomial expected = kind == CrystalKind::key ? key_polynomial(a) : lock_polynomial(a);
        if (character(g) != expected)
            return std::string(to_string(kind)) + " crystal character differs from the polynomial";
    }
    return std::nullopt;
}

std::optional<std::string> check_characterizations(const Composition& a)
{
    const Polynomial key = key_polynomial(a);
    const Polynomial lock = lock_polynomial(a);
    const SymmetryClass shape = classify_symmetry(a);
    const SymmetryClass poly{is_symmetric(key), is_quasisymmetric(key), is_symmetric(lock), is_quasisymmetric(lock)};
    auto flag = [](bool b) { return b ? "true" : "false"; };
    if (poly.key_sym != shape.key_sym)
        return std::string("key symmetric: polynomial ") + flag(poly.key_sym) + ", shape " + flag(shape.key_sym);
    if (poly.key_qsym != shape.key_qsym)
        return std::string("key quasisymmetric: polynomial ") + flag(poly.key_qsym) + ", shape " +
               flag(shape.key_qsym);
    if (poly.lock_sym != shape.lock_sym)
        return std::string("lock symmetric: polynomial ") + flag(poly.lock_sym) + ", shape " + flag(shape.lock_sym);
    if (poly.lock_qsym != shape.lock_qsym)
        return std::string("lock quasisymmetric: polynomial ") + flag(poly.lock_qsym) + ", shape " +
               flag(shape.lock_qsym);

    const int n = static_cast<int>(a.size());
    if (a.is_weakly_increasing() && key != schur_polynomial(a.reversed(), n))
        return "key polynomial differs from s_" + a.reversed().to_string();
    if (is_zeros_then_constant(a) && lock != schur_polynomial(flatten(a), n))
        return "lock polynomial differs from s_" + flatten(a).to_string();
    const Composition flat = flatten(a);
    if (std::is_sorted(flat.vec().begin(), flat.vec().end(), std::greater<>()) && lock != key)
        return "lock and key polynomials differ although the nonzero parts weakly decrease";
    return std::nullopt;
}

std::optional<std::string> check_agreement(const Composition& a)
{
    const Composition alpha = flatten(a);
    const std::vector<int> labels = present_labels(a);

    for (const LabeledDiagram& t : enumerate_lkt(a)) {
        const UnlockTrace trace = apply_unlock(t, a);
        const Schedule& sched = trace.schedule;
        const int m = sched.width;

        // Diagram route through the pairing form, independent of the shadow
        // inside apply_unlock.
        Diagram shadow = t.diagram();
        std::vector<Diagram> full{shadow};
        LabeledDiagram cur = t;
        for (std::size_t s = 0; s < sched.indices.size(); ++s) {
            auto next = rectify_by_pairing(shadow, sched.indices[s]);
            auto step = unlock_op(cur, sched.indices[s]);
            if (!next || !step || step->first.diagram() != *next)
                return "step " + std::to_string(s + 1) + " disagrees on " + show(t);
            if (step->second != trace.steps[s])
                return "step " + std::to_string(s + 1) + " of the trace is not reproducible on " + show(t);
            shadow = *next;
            full.push_back(shadow);
            cur = step->first;
        }

        // Per group: the right string is being moved, swaps only cross
        // smaller labels, nothing larger moves, and the string sits in
        // columns {1..k} plus its untouched right part afterwards.
        LabeledDiagram state = t;
        std::size_t step_index = 0;
        for (const Schedule::Group& g : sched.groups) {
            const int label = labels[g.part];
            const int part = alpha[g.part];
            for (std::size_t s = g.begin; s < g.end; ++s, ++step_index) {
                const UnlockStep& step = trace.steps[s];
                if (step.chosen.label != label)
                    return "step " + std::to_string(s + 1) + " moves label " + std::to_string(step.chosen.label) +
                           " while justifying " + std::to_string(label) + " on " + show(t);
                for (const Swap& sw : step.swaps)
                    if (sw.y_label >= sw.x_label)
                        return "swap of " + std::to_string(sw.x_label) + " with " + std::to_string(sw.y_label) +
                               " at step " + std::to_string(s + 1) + " on " + show(t);
                LabeledDiagram after = unlock_op(state, step.op)->first;
                for (const Entry& e : state.entries())
                    if (e.label > label && after.label_at(e.cell) != e.label)
                        return "label " + std::to_string(e.label) + " moved while justifying " +
                               std::to_string(label) + " on " + show(t);
                state = std::move(after);
            }
            std::set<int> expected;
            for (int c = 1; c <= g.box; ++c)
                expected.insert(c);
            for (int c = m - part + g.box + 1; c <= m; ++c)
                expected.insert(c);
            if (string_columns(state, label) != expected)
                return "string " + std::to_string(label) + " is not justified through box " +
                       std::to_string(g.box) + " on " + show(t);
            for (std::size_t q = 0; q < g.part; ++q) {
                std::set<int> left;
                for (int c = 1; c <= alpha[q]; ++c)
                    left.insert(c);
                if (string_columns(state, labels[q]) != left)
                    return "string " + std::to_string(labels[q]) + " lost its justification on " + show(t);
            }
        }

        // Truncation: for p < k and each truncating label above l_p, the
        // prefix through the groups of part p pushes the same cells.
        for (std::size_t p = 0; p + 1 < labels.size(); ++p) {
            std::size_t prefix = 0;
            for (const Schedule::Group& g : sched.groups)
                if (g.part == p)
                    prefix = g.end;
            for (std::size_t q = p + 1; q < labels.size(); ++q) {
                const LabeledDiagram cut = truncate_below(t, labels[q]);
                if (!validate_lkt(cut, truncated_content(a, labels[q]), m))
                    return "truncation below " + std::to_string(labels[q]) + " is not a lock tableau on " + show(t);
                Diagram d = cut.diagram();
                for (std::size_t s = 0; s < prefix; ++s) {
                    auto next = rectify(d, sched.indices[s]);
                    const auto lhs = pushed_cell(d, next);
                    const auto rhs = pushed_cell(full[s], full[s + 1]);
                    if (lhs != rhs)
                        return "truncation below " + std::to_string(labels[q]) + " pushes differently at step " +
                               std::to_string(s + 1) + " on " + show(t);
                    d = *next;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_labeling(const Composition& a)
{
    const int n = static_cast<int>(a.size());
    const std::vector<Diagram> key_closure = kohnert_closure(key_diagram(a));
    const std::vector<LabeledDiagram> keys = enumerate_kkt(a);
    if (keys.size() != key_closure.size())
        return "KKT has " + std::to_string(keys.size()) + " members for " + std::to_string(key_closure.size()) +
               " diagrams";
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (keys[k].diagram() != key_closure[k])
            return "KKT labeling changed the diagram " + show(key_closure[k]);
        if (!validate_kkt(keys[k], a))
            return "invalid key labeling " + show(keys[k]);
        if (content(keys[k], n) != a)
            return "key labeling has the wrong content " + show(keys[k]);
    }

    const std::vector<Diagram> lock_closure = kohnert_closure(lock_diagram(a));
    const std::vector<LabeledDiagram> locks = enumerate_lkt(a);
    if (locks.size() != lock_closure.size())
        return "LKT has " + std::to_string(locks.size()) + " members for " + std::to_string(lock_closure.size()) +
               " diagrams";
    for (std::size_t k = 0; k < locks.size(); ++k) {
        if (locks[k].diagram() != lock_closure[k])
            return "LKT labeling changed the diagram " + show(lock_closure[k]);
        if (!validate_lkt(locks[k], a))
            return "invalid lock labeling " + show(locks[k]);
    }

    // The source tableau maps to the only key tableau of its weight.
    const LabeledDiagram source = lock_source_tableau(a);
    const Composition w = weight(source.diagram());
    std::size_t same_weight = 0;
    for (const LabeledDiagram& k : keys)
        same_weight += weight(k.diagram()) == w;
    if (same_weight != 1)
        return std::to_string(same_weight) + " key tableaux share the source weight " + w.to_string();
    const LabeledDiagram image = apply_unlock(source, a).output;
    if (weight(image.diagram()) != w)
        return "unlocking the source tableau changed its weight";
    return std::nullopt;
}

std::optional<std::string> check_crystal(const Composition& a)
{
    const int n = static_cast<int>(a.size());
    for (CrystalKind kind : {CrystalKind::key, CrystalKind::lock}) {
        const std::vector<LabeledDiagram> vertices = kind == CrystalKind::key ? enumerate_kkt(a) : enumerate_lkt(a);
        const std::string tag = std::string(to_string(kind)) + " ";
        for (const LabeledDiagram& t : vertices) {
            for (int i = 1; i <= colors(a); ++i) {
                const std::string op = std::to_string(i);
                auto up = raise(kind, t, a, i);
                if (up) {
                    if (lower(kind, *up, a, i) != t)
                        return tag + "f_" + op + " e_" + op + " is not the identity on " + show(t);
                    std::vector<int> before = weight_vector(t.diagram(), n);
                    std::vector<int> after = weight_vector(up->diagram(), n);
                    --before[i];
                    ++before[i - 1];
                    if (before != after)
                        return tag + "e_" + op + " moved weight incorrectly on " + show(t);
                }
                auto down = lower(kind, t, a, i);
                if (down && raise(kind, *down, a, i) != t)
                    return tag + "e_" + op + " f_" + op + " is not the identity on " + show(t);

                // String length along e_i against the unpaired count.
                const std::size_t unpaired = vertical_pairing(t.diagram(), i).unpaired_upper.size();
                std::size_t length = 0;
                for (auto cur = up; cur; cur = raise(kind, *cur, a, i))
                    ++length;
                if (kind == CrystalKind::key ? length != unpaired : length > unpaired)
                    return tag + "e_" + op + " string of length " + std::to_string(length) + " with " +
                           std::to_string(unpaired) + " unpaired boxes on " + show(t);
            }
        }
    }

    const int width = std::max(1, a.max_part());
    for (const Diagram& seed : {key_diagram(a), lock_diagram(a)}) {
        for (const Diagram& d : kohnert_closure(seed)) {
            for (int r = 1; r <= colors(a); ++r) {
                auto up = raise_diagram(d, r);
                if (up && lower_diagram(*up, r) != d)
                    return "diagram f_" + std::to_string(r) + " e_" + std::to_string(r) + " differs on " + show(d);
                auto down = lower_diagram(d, r);
                if (down && raise_diagram(*down, r) != d)
                    return "diagram e_" + std::to_string(r) + " f_" + std::to_string(r) + " differs on " + show(d);
                if (!up)
                    continue;
                for (int c = 1; c < width; ++c) {
                    auto rect = rectify(d, c);
                    if (!rect)
                        continue;
                    std::optional<Diagram> lhs = rectify(*up, c);
                    std::optional<Diagram> rhs = raise_diagram(*rect, r);
                    if (lhs != rhs)
                        return "rectify_" + std::to_string(c) + " and e_" + std::to_string(r) +
                               " do not commute on " + show(d) + ": " + show(lhs) + " vs " + show(rhs);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_rectification(const Composition& a)
{
    const int width = std::max(1, a.max_part());
    for (const Diagram& seed : {key_diagram(a), lock_diagram(a)})
        for (const Diagram& d : kohnert_closure(seed))
            for (int i = 1; i < width + 1; ++i)
                if (rectify(d, i) != rectify_by_pairing(d, i))
                    return "rectify_" + std::to_string(i) + " forms disagree on " + show(d);
    return std::nullopt;
}

const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{
        "positivity", "injection", "intertwine", "connected", "characterize",
        "agreement",  "labeling",  "crystal",    "rectify",
    };
    return names;
}

std::vector<VerificationReport> run_check(std::string_view name, const SweepRange& range, unsigned threads)
{
    static const std::map<std::string, Checker, std::less<>> table{
        {"positivity", check_positivity},   {"injection", check_injection},
        {"intertwine", check_intertwining}, {"connected", check_connectivity},
        {"characterize", check_characterizations}, {"agreement", check_agreement},
        {"labeling", check_labeling},       {"crystal", check_crystal},
        {"rectify", check_rectification},
    };
    std::vector<VerificationReport> reports;
    if (name == "all") {
        for (const std::string& n : check_names())
            reports.push_back(run_sweep(n, table.at(n), range, threads));
        return reports;
    }
    auto it = table.find(name);
    if (it == table.end())
        throw InvalidInput("unknown check '" + std::string(name) + "'");
    reports.push_back(run_sweep(name, it->second, range, threads));
    return reports;
}

std::string format_summary(const std::vector<VerificationReport>& reports)
{
    std::ostringstream os;
    os << std::left << std::setw(14) << "check" << std::right << std::setw(8) << "tested" << std::setw(10)
       << "failures" << std::setw(11) << "seconds" << "  result\n";
    for (const VerificationReport& r : reports) {
        os << std::left << std::setw(14) << r.check << std::right << std::setw(8) << r.tested << std::setw(10)
           << r.failures.size() << std::setw(11) << std::fixed << std::setprecision(3) << r.elapsed_seconds << "  "
           << (r.passed() ? "pass" : "FAIL") << '\n';
        for (const Failure& f : r.failures)
            os << "  " << f.comp.to_string() << ": " << f.witness << '\n';
    }
    return os.str();
}

} // namespace kohnert
