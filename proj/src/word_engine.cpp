// Words over N Fibonacci generators, quotient presentations of Fib^{*N}, and
// the bounded saturation engine that mechanizes small-case collapse
// derivations. All equalities are kept as pairs of normalized WordSums; the
// rules below only ever produce consequences that hold in every fusion
// category interpreting the letters as Fibonacci objects satisfying the
// presentation.

#include "goldfusion/word_engine.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace goldfusion {

bool word_is_reduced(const Word& w)
{
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == w[i - 1]) return false;
    return true;
}

bool shortlex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

static void sort_sum(WordSum& s)
{
    std::sort(s.begin(), s.end(), shortlex_less);
}

WordSum normalize(const Word& raw)
{
    WordSum out;
    std::vector<Word> stack{raw};
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        std::size_t i = 1;
        while (i < w.size() && w[i] != w[i - 1]) ++i;
        if (i >= w.size()) {
            out.push_back(std::move(w));
            continue;
        }
        // u a a v -> u v  and  u a v, leftmost pair first
        Word dropped = w.substr(0, i - 1) + w.substr(i + 1);
        Word merged = w.substr(0, i) + w.substr(i + 1);
        stack.push_back(std::move(dropped));
        stack.push_back(std::move(merged));
    }
    sort_sum(out);
    return out;
}

WordSum normalize_sum(const WordSum& raw)
{
    WordSum out;
    for (const Word& w : raw) {
        WordSum part = normalize(w);
        out.insert(out.end(), part.begin(), part.end());
    }
    sort_sum(out);
    return out;
}

WordSum word_tensor(const WordSum& s1, const WordSum& s2)
{
    WordSum out;
    for (const Word& a : s1)
        for (const Word& b : s2) {
            WordSum part = normalize(a + b);
            out.insert(out.end(), part.begin(), part.end());
        }
    sort_sum(out);
    return out;
}

WordSum reverse_sum(const WordSum& s)
{
    WordSum out;
    out.reserve(s.size());
    for (const Word& w : s) out.emplace_back(w.rbegin(), w.rend());
    sort_sum(out);
    return out;
}

namespace {

// multiset difference a - b; nullopt when b is not contained in a
std::optional<WordSum> multiset_minus(const WordSum& a, const WordSum& b)
{
    WordSum out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (shortlex_less(a[i], b[j])) {
            out.push_back(a[i++]);
        } else {
            return std::nullopt;  // b[j] missing from a
        }
    }
    if (j < b.size()) return std::nullopt;
    out.insert(out.end(), a.begin() + i, a.end());
    return out;
}

WordSum multiset_intersect(const WordSum& a, const WordSum& b)
{
    WordSum out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (shortlex_less(a[i], b[j])) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

}  // namespace

std::optional<WordSum> divide_left(char x, const WordSum& s)
{
    // Left multiplication by a Fibonacci generator satisfies L^2 = I + L, so
    // L^{-1} = L - I: the quotient is normalize(x s) - s when the difference
    // is a genuine multiset.
    WordSum xs;
    for (const Word& w : s) {
        WordSum part = normalize(std::string(1, x) + w);
        xs.insert(xs.end(), part.begin(), part.end());
    }
    sort_sum(xs);
    return multiset_minus(xs, s);
}

std::optional<WordSum> divide_right(char x, const WordSum& s)
{
    WordSum sx;
    for (const Word& w : s) {
        WordSum part = normalize(w + std::string(1, x));
        sx.insert(sx.end(), part.begin(), part.end());
    }
    sort_sum(sx);
    return multiset_minus(sx, s);
}

void Presentation::validate() const
{
    if (generators == 0 || generators > 26)
        throw std::invalid_argument("presentation needs between 1 and 26 generators");
    for (const auto& [l, r] : relations) {
        if (l.empty() || r.empty()) throw std::invalid_argument("relation sides must be nonempty");
        for (const Word* side : {&l, &r}) {
            if (!word_is_reduced(*side))
                throw std::invalid_argument("relation side '" + *side + "' is not reduced");
            for (char ch : *side)
                if (ch < 'a' || ch >= static_cast<char>('a' + generators))
                    throw std::invalid_argument("relation letter out of range: '" + *side + "'");
        }
    }
}

ObjectVec evaluate(const WordSum& s, const FusionRing& ring, const GeneratorAssignment& assign)
{
    for (std::uint32_t t : assign)
        if (!is_fib_like(ring, t))
            throw std::invalid_argument("assignment target '" +
                                        (t < ring.rank() ? ring.label(t) : std::string("?")) +
                                        "' is not a Fibonacci object");
    ObjectVec total(ring.rank(), 0);
    for (const Word& w : s) {
        ObjectVec v(ring.rank(), 0);
        v[ring.unit()] = 1;
        for (char ch : w) {
            std::size_t idx = static_cast<std::size_t>(ch - 'a');
            if (idx >= assign.size()) throw std::invalid_argument("letter without assignment");
            v = tensor(ring, v, ring.basis_vec(assign[idx]));
        }
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += v[i];
    }
    return total;
}

ObjectVec evaluate_word(const Word& w, const FusionRing& ring, const GeneratorAssignment& assign)
{
    return evaluate(WordSum{w}, ring, assign);
}

ConsistencyReport check_presentation_consistency(const Presentation& p, const FusionRing& ring,
                                                 const GeneratorAssignment& assign)
{
    p.validate();
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        ObjectVec l = evaluate(WordSum{p.relations[i].first}, ring, assign);
        ObjectVec r = evaluate(WordSum{p.relations[i].second}, ring, assign);
        if (l != r) return {false, i};
    }
    return {true, std::nullopt};
}

std::int64_t word_end_dim(const Word& w, const FusionRing& ring, const GeneratorAssignment& assign)
{
    ObjectVec v = evaluate_word(w, ring, assign);
    return hom_dim(v, v);
}

Word cyclic_word(char pattern_start, std::size_t n, std::uint32_t generators)
{
    if (generators == 0) throw std::invalid_argument("need at least one generator");
    if (pattern_start < 'a' || pattern_start >= static_cast<char>('a' + generators))
        throw std::invalid_argument("pattern start out of range");
    Word w;
    w.reserve(n);
    std::uint32_t cur = static_cast<std::uint32_t>(pattern_start - 'a');
    for (std::size_t i = 0; i < n; ++i) {
        w.push_back(static_cast<char>('a' + cur));
        cur = (cur + 1) % generators;
    }
    return w;
}

// --- saturation engine ------------------------------------------------------

namespace {

struct Equality {
    WordSum lhs, rhs;  // canonical: lhs <= rhs in the sum order below
};

bool sum_less(const WordSum& a, const WordSum& b)
{
    std::size_t la = 0, lb = 0;
    for (const Word& w : a) la += w.size();
    for (const Word& w : b) lb += w.size();
    if (la != lb) return la < lb;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;  // lexicographic on the sorted word vectors
}

std::size_t total_letters(const Equality& e)
{
    std::size_t n = 0;
    for (const Word& w : e.lhs) n += w.size();
    for (const Word& w : e.rhs) n += w.size();
    return n;
}

std::size_t max_word_len(const Equality& e)
{
    std::size_t n = 0;
    for (const Word& w : e.lhs) n = std::max(n, w.size());
    for (const Word& w : e.rhs) n = std::max(n, w.size());
    return n;
}

std::string serialize_sum(const WordSum& s)
{
    std::string out;
    for (const Word& w : s) {
        out += w;
        out += ',';
    }
    return out;
}

std::string serialize_eq(const Equality& e)
{
    return serialize_sum(e.lhs) + "|" + serialize_sum(e.rhs);
}

Equality canonical(WordSum l, WordSum r)
{
    if (sum_less(r, l)) l.swap(r);
    return Equality{std::move(l), std::move(r)};
}

// The saturation state. Every stored equality remembers how it was derived,
// so a conclusion can be exported as a replayable step list.
struct Engine {
    const Presentation& pres;
    DeriveBudget budget;
    std::optional<std::pair<char, char>> target;
    std::size_t len_cap;

    struct Node {
        Equality eq;
        std::string rule;
        std::vector<std::size_t> premises;  // indices into nodes
    };
    std::vector<Node> nodes;
    std::map<std::string, std::size_t> index;  // canonical serialization -> node
    std::vector<std::size_t> rewrites;         // nodes with a single-word side
    std::vector<std::size_t> processed_list;

    // queue keyed by (letters, serialization) for deterministic best-first
    std::set<std::pair<std::pair<std::size_t, std::string>, std::size_t>> queue;

    std::optional<std::size_t> goal;
    DeriveStats stats;

    Engine(const Presentation& p, const DeriveBudget& b, std::optional<std::pair<char, char>> t)
        : pres(p), budget(b), target(t)
    {
        len_cap = b.max_word_len;
        if (len_cap == 0) {
            std::size_t longest = 0;
            for (const auto& [l, r] : p.relations)
                longest = std::max({longest, l.size(), r.size()});
            len_cap = 2 * longest + 4;
        }
        nodes.reserve(b.max_equalities + 2);  // stable references during expansion
    }

    bool is_goal(const Equality& e) const
    {
        if (!(e.lhs.size() == 1 && e.rhs.size() == 1 && e.lhs[0].size() == 1 &&
              e.rhs[0].size() == 1 && e.lhs[0] != e.rhs[0]))
            return false;
        if (!target) return true;
        char x = e.lhs[0][0], y = e.rhs[0][0];
        return (x == target->first && y == target->second) ||
               (x == target->second && y == target->first);
    }

    // returns true when the goal was found
    bool add(Equality eq, std::string rule, std::vector<std::size_t> premises)
    {
        if (eq.lhs == eq.rhs) return false;  // trivial
        if (max_word_len(eq) > len_cap) return false;
        std::string key = serialize_eq(eq);
        auto it = index.find(key);
        if (it != index.end()) return false;
        if (is_goal(eq)) {
            std::size_t id = nodes.size();
            index.emplace(std::move(key), id);
            nodes.push_back(Node{std::move(eq), std::move(rule), std::move(premises)});
            ++stats.derived;
            goal = id;
            return true;
        }
        if (nodes.size() >= budget.max_equalities) {
            stats.budget_hit = true;
            return false;
        }
        std::size_t id = nodes.size();
        index.emplace(std::move(key), id);
        queue.insert({{total_letters(eq), serialize_eq(eq)}, id});
        if (eq.lhs.size() == 1 || eq.rhs.size() == 1) rewrites.push_back(id);
        nodes.push_back(Node{std::move(eq), std::move(rule), std::move(premises)});
        ++stats.derived;
        return false;
    }

    bool expand(std::size_t id);
    bool apply_rewrites_to(std::size_t target_id, std::size_t rewrite_id);
    DeriveOutcome run();
};

// Substitute one occurrence of `from` (a single word) by the sum `to` inside
// summand `w`; returns every position's result.
std::vector<WordSum> substitute_everywhere(const Word& w, const Word& from, const WordSum& to)
{
    std::vector<WordSum> results;
    if (from.empty() || from.size() > w.size()) return results;
    for (std::size_t pos = 0; pos + from.size() <= w.size(); ++pos) {
        if (w.compare(pos, from.size(), from) != 0) continue;
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + from.size());
        WordSum replaced;
        for (const Word& beta : to) {
            WordSum part = normalize(prefix + beta + suffix);
            replaced.insert(replaced.end(), part.begin(), part.end());
        }
        sort_sum(replaced);
        results.push_back(std::move(replaced));
    }
    return results;
}

// Applies a single-word rewrite (from -> to, justified by node `rewrite`)
// to every summand position of every side of node `target`.
bool Engine::apply_rewrites_to(std::size_t target_id, std::size_t rewrite_id)
{
    if (target_id == rewrite_id) return false;
    const Equality& teq = nodes[target_id].eq;  // nodes has reserved capacity
    const Equality& req = nodes[rewrite_id].eq;
    struct Direction {
        const Word* from;
        const WordSum* to;
    };
    std::vector<Direction> dirs;
    if (req.lhs.size() == 1) dirs.push_back({&req.lhs[0], &req.rhs});
    if (req.rhs.size() == 1) dirs.push_back({&req.rhs[0], &req.lhs});
    for (const Direction& dir : dirs) {
        for (int side = 0; side < 2; ++side) {
            const WordSum& s = side == 0 ? teq.lhs : teq.rhs;
            const WordSum& other = side == 0 ? teq.rhs : teq.lhs;
            for (std::size_t wi = 0; wi < s.size(); ++wi) {
                if (wi > 0 && s[wi] == s[wi - 1]) continue;  // identical summand
                for (WordSum& repl : substitute_everywhere(s[wi], *dir.from, *dir.to)) {
                    WordSum rest(s);
                    rest.erase(rest.begin() + wi);
                    rest.insert(rest.end(), repl.begin(), repl.end());
                    sort_sum(rest);
                    if (add(canonical(std::move(rest), WordSum(other)), "substitute",
                            {target_id, rewrite_id}))
                        return true;
                }
            }
        }
    }
    return false;
}

bool Engine::expand(std::size_t id)
{
    const Equality& eq = nodes[id].eq;
    ++stats.processed;

    // Substitution pairing: every known rewrite applied to this equality,
    // and, when this equality is itself a rewrite, this rewrite applied to
    // everything processed so far. Any (target, rewrite) pair is covered by
    // the time the later of the two is expanded.
    const std::size_t n_rewrites = rewrites.size();
    for (std::size_t k = 0; k < n_rewrites; ++k)
        if (apply_rewrites_to(id, rewrites[k])) return true;
    if (eq.lhs.size() == 1 || eq.rhs.size() == 1) {
        const std::size_t n_processed = processed_list.size();
        for (std::size_t k = 0; k < n_processed; ++k)
            if (apply_rewrites_to(processed_list[k], id)) return true;
    }

    // cancel-left / cancel-right: exact division by each generator
    for (std::uint32_t g = 0; g < pres.generators; ++g) {
        char x = static_cast<char>('a' + g);
        auto l1 = divide_left(x, eq.lhs);
        auto r1 = divide_left(x, eq.rhs);
        if (l1 && r1 && add(canonical(std::move(*l1), std::move(*r1)), "cancel-left", {id})) return true;
        auto l2 = divide_right(x, eq.lhs);
        auto r2 = divide_right(x, eq.rhs);
        if (l2 && r2 && add(canonical(std::move(*l2), std::move(*r2)), "cancel-right", {id})) return true;
    }

    // reversal (duality: every generator is self-dual)
    if (add(canonical(reverse_sum(eq.lhs), reverse_sum(eq.rhs)), "reverse", {id})) return true;

    // one-letter multiplication on either side
    for (std::uint32_t g = 0; g < pres.generators; ++g) {
        WordSum letter{Word(1, static_cast<char>('a' + g))};
        if (add(canonical(word_tensor(letter, eq.lhs), word_tensor(letter, eq.rhs)),
                "multiply-left", {id}))
            return true;
        if (add(canonical(word_tensor(eq.lhs, letter), word_tensor(eq.rhs, letter)),
                "multiply-right", {id}))
            return true;
    }

    // cancellation of common summands (semisimplicity)
    WordSum common = multiset_intersect(eq.lhs, eq.rhs);
    if (!common.empty()) {
        auto l = multiset_minus(eq.lhs, common);
        auto r = multiset_minus(eq.rhs, common);
        if (l && r && !l->empty() && !r->empty() &&
            add(canonical(std::move(*l), std::move(*r)), "sum-cancel", {id}))
            return true;
    }
    return false;
}

DeriveOutcome Engine::run()
{
    pres.validate();
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
        Equality eq = canonical(WordSum{pres.relations[i].first}, WordSum{pres.relations[i].second});
        if (add(std::move(eq), "relation", {})) break;
    }
    // once the equality budget is consumed nothing new can be recorded, so
    // further expansion is pointless
    while (!goal && !queue.empty() && !stats.budget_hit) {
        std::size_t id = queue.begin()->second;
        queue.erase(queue.begin());
        if (expand(id)) break;
        processed_list.push_back(id);
    }

    DeriveOutcome out;
    out.stats = stats;
    out.collapsed = goal.has_value();
    if (goal) {
        // extract the ancestor chain of the goal, topologically ordered
        std::vector<char> needed(nodes.size(), 0);
        std::vector<std::size_t> stack{*goal};
        needed[*goal] = 1;
        while (!stack.empty()) {
            std::size_t id = stack.back();
            stack.pop_back();
            for (std::size_t p : nodes[id].premises)
                if (!needed[p]) {
                    needed[p] = 1;
                    stack.push_back(p);
                }
        }
        std::vector<std::size_t> order;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (needed[i]) order.push_back(i);  // node ids are creation-ordered
        std::vector<std::size_t> renum(nodes.size(), 0);
        Derivation d;
        for (std::size_t i = 0; i < order.size(); ++i) renum[order[i]] = i;
        for (std::size_t id : order) {
            DeriveStep step;
            step.rule = nodes[id].rule;
            for (std::size_t p : nodes[id].premises) step.premises.push_back(renum[p]);
            step.lhs = nodes[id].eq.lhs;
            step.rhs = nodes[id].eq.rhs;
            d.steps.push_back(std::move(step));
        }
        out.derivation = std::move(d);
    }
    return out;
}

}  // namespace

DeriveOutcome derive_collapse(const Presentation& p, const DeriveBudget& budget,
                              std::optional<std::pair<char, char>> target)
{
    Engine engine(p, budget, target);
    return engine.run();
}

bool replay_derivation(const Derivation& d, const FusionRing& ring,
                       const GeneratorAssignment& assign)
{
    for (const DeriveStep& step : d.steps) {
        ObjectVec l = evaluate(step.lhs, ring, assign);
        ObjectVec r = evaluate(step.rhs, ring, assign);
        if (l != r) return false;
    }
    return true;
}

}  // namespace goldfusion
