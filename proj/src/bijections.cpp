#include "parteq/bijections.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "parteq/errors.hpp"
#include "parteq/notation.hpp"
#include "parteq/statistics.hpp"

namespace parteq {

namespace {

template <class T>
void require_domain(Family f, const T& value)
{
    if (auto v = validate_membership(f, value); !v)
        throw DomainError(to_text(value) + " is not in " + std::string(family_name(f)) + ": " +
                          v.reason);
}

template <class T>
void require_codomain(Family f, const T& value, Cell expected)
{
    if (auto v = validate_membership(f, value); !v)
        throw IntegrityError("image " + to_text(value) + " is not in " +
                             std::string(family_name(f)) + ": " + v.reason);
    if (cell_of(f, value) != expected)
        throw IntegrityError("image " + to_text(value) + " landed in the wrong cell of " +
                             std::string(family_name(f)));
}

/// Builds a partition from a reconstructed part list; a malformed list
/// means the input was not really a member of the domain.
Partition rebuilt(std::vector<int> parts, const char* map)
{
    try {
        return Partition(std::move(parts));
    } catch (const StructureError& e) {
        throw IntegrityError(std::string(map) + ": reconstruction is not a partition (" +
                             e.what() + ")");
    }
}

/// Shift applied at 1-based position j by the staircase of a marked position
/// set: two for every marked position after j, plus one if j itself is marked.
int staircase(const std::vector<int>& marked, int j)
{
    int s = 0;
    for (int i : marked) {
        if (i > j)
            s += 2;
        else if (i == j)
            s += 1;
    }
    return s;
}

/// Number of values in `set` that are >= j.
int at_least(const std::vector<int>& set, int j)
{
    return static_cast<int>(std::count_if(set.begin(), set.end(), [j](int v) { return v >= j; }));
}

} // namespace

// ---------------------------------------------------------------------------
// f1

FPartition apply_f1(const Partition& lambda)
{
    require_domain(Family::ped, lambda);
    const int m = lambda.length();

    // Step 1: strip a staircase at the even positions; every part becomes odd.
    std::vector<int> even_at;
    for (int j = 1; j <= m; ++j)
        if (lambda[j - 1] % 2 == 0)
            even_at.push_back(j);
    std::vector<int> odd(m);
    for (int j = 1; j <= m; ++j)
        odd[j - 1] = lambda[j - 1] - staircase(even_at, j);
    std::vector<int> cut; // 2i - 1 for each even position i, descending
    for (auto it = even_at.rbegin(); it != even_at.rend(); ++it)
        cut.push_back(2 * *it - 1);
    const Partition lambda1 = rebuilt(odd, "f1 step 1");
    const Partition pi(cut);
    if (lambda1.weight() + pi.weight() != lambda.weight())
        throw IntegrityError("f1 step 1 does not preserve weight");

    // Step 2: peel one unit off each part above 1, leaving m ones.
    std::vector<int> halved;
    for (int v : lambda1)
        if (v > 1)
            halved.push_back(v - 1);
    const int t = static_cast<int>(halved.size());

    // Step 3: part 2s repeated (l''_s - l''_{s+1}) / 2 times.
    std::vector<int> out;
    for (int s = t; s >= 1; --s) {
        const int next = s < t ? halved[s] : 0;
        for (int r = 0; r < (halved[s - 1] - next) / 2; ++r)
            out.push_back(2 * s);
    }
    std::sort(out.begin(), out.end(), std::greater<>());

    FPartition mu;
    for (int v : pi)
        if (v > 1)
            out.push_back(v);
        else
            mu.overlined_one = true;
    out.insert(out.end(), static_cast<std::size_t>(m), 1);
    mu.parts = Partition::canonical(std::move(out));

    require_codomain(Family::F, mu, {lambda.weight(), m, lambda.even_parts()});
    return mu;
}

Partition apply_f1_inv(const FPartition& mu)
{
    require_domain(Family::F, mu);
    const int m = mu.ones();

    std::vector<int> odd_at; // recovered even positions of lambda, ascending
    std::vector<int> even_count(static_cast<std::size_t>(m) + 1, 0);
    if (mu.overlined_one)
        odd_at.push_back(1);
    for (int v : mu.parts) {
        if (v % 2 == 1 && v > 1)
            odd_at.push_back((v + 1) / 2);
        else if (v % 2 == 0)
            ++even_count[static_cast<std::size_t>(v / 2)];
    }
    std::sort(odd_at.begin(), odd_at.end());

    int t = 0;
    for (int s = m; s >= 1; --s)
        if (even_count[static_cast<std::size_t>(s)] > 0) {
            t = s;
            break;
        }
    std::vector<int> lambda1(static_cast<std::size_t>(m), 1);
    int tail = 0;
    for (int s = t; s >= 1; --s) {
        tail += even_count[static_cast<std::size_t>(s)];
        lambda1[static_cast<std::size_t>(s - 1)] = 2 * tail + 1;
    }

    std::vector<int> parts(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j)
        parts[j - 1] = lambda1[j - 1] + staircase(odd_at, j);
    Partition lambda = rebuilt(std::move(parts), "f1 inverse");
    require_codomain(Family::ped, lambda,
                     {mu.weight(), m, static_cast<int>(odd_at.size())});
    return lambda;
}

// ---------------------------------------------------------------------------
// f2

SignedPartition apply_f2(const Partition& lambda)
{
    require_domain(Family::ped, lambda);
    const int m = lambda.length();
    std::vector<int> odd_at;
    for (int j = 1; j <= m; ++j)
        if (lambda[j - 1] % 2 == 1)
            odd_at.push_back(j);

    std::vector<int> pos(m), neg;
    for (int j = 1; j <= m; ++j)
        pos[j - 1] = lambda[j - 1] + staircase(odd_at, j);
    for (auto it = odd_at.rbegin(); it != odd_at.rend(); ++it)
        neg.push_back(2 * *it - 1);

    SignedPartition sigma{rebuilt(std::move(pos), "f2"), Partition(std::move(neg))};
    require_codomain(Family::F_signed, sigma, {lambda.weight(), m, lambda.even_parts()});
    return sigma;
}

Partition apply_f2_inv(const SignedPartition& sigma)
{
    require_domain(Family::F_signed, sigma);
    const int m = sigma.positive_length();
    std::vector<int> odd_at;
    for (int v : sigma.negative)
        odd_at.push_back((v + 1) / 2);
    std::sort(odd_at.begin(), odd_at.end());

    std::vector<int> parts(m);
    for (int j = 1; j <= m; ++j)
        parts[j - 1] = sigma.positive[j - 1] - staircase(odd_at, j);
    Partition lambda = rebuilt(std::move(parts), "f2 inverse");
    require_codomain(Family::ped, lambda,
                     {sigma.weight(), m, m - sigma.negative_length()});
    return lambda;
}

// ---------------------------------------------------------------------------
// g1

XLabeledPartition apply_g1(const PartitionPair& pair)
{
    require_domain(Family::V, pair);
    const auto& beta = pair.beta.parts();
    std::vector<LabeledPart> entries;
    for (int i = 1; i <= pair.alpha.length(); ++i) {
        const bool labeled = std::find(beta.begin(), beta.end(), i) != beta.end();
        entries.push_back({pair.alpha[i - 1] + at_least(beta, i), labeled});
    }
    XLabeledPartition lambda(std::move(entries));
    require_codomain(Family::A, lambda, {pair.weight(), -1, pair.beta.length()});
    return lambda;
}

PartitionPair apply_g1_inv(const XLabeledPartition& lambda)
{
    require_domain(Family::A, lambda);
    std::vector<int> beta;
    for (int i = lambda.length(); i >= 1; --i)
        if (lambda[i - 1].x)
            beta.push_back(i);
    std::vector<int> alpha;
    for (int i = 1; i <= lambda.length(); ++i)
        alpha.push_back(lambda[i - 1].value - at_least(beta, i));
    PartitionPair pair{rebuilt(std::move(alpha), "g1 inverse"), Partition(std::move(beta))};
    require_codomain(Family::V, pair, {lambda.weight(), -1, lambda.labeled()});
    return pair;
}

// ---------------------------------------------------------------------------
// g2

SignedPartition apply_g2(const XLabeledPartition& lambda)
{
    require_domain(Family::A, lambda);
    std::vector<int> unlabeled;
    for (int j = lambda.length(); j >= 1; --j)
        if (!lambda[j - 1].x)
            unlabeled.push_back(j);
    std::vector<int> pos;
    for (int j = 1; j <= lambda.length(); ++j)
        pos.push_back(lambda[j - 1].value + at_least(unlabeled, j));

    SignedPartition sigma{rebuilt(std::move(pos), "g2"), Partition(std::move(unlabeled))};
    require_codomain(Family::A_signed, sigma, {lambda.weight(), -1, lambda.labeled()});
    if (sigma.positive_length() != lambda.length())
        throw IntegrityError("g2 changed the number of parts");
    return sigma;
}

XLabeledPartition apply_g2_inv(const SignedPartition& sigma)
{
    require_domain(Family::A_signed, sigma);
    const auto& unlabeled = sigma.negative.parts();
    std::vector<LabeledPart> entries;
    for (int j = 1; j <= sigma.positive_length(); ++j) {
        const bool plain = std::find(unlabeled.begin(), unlabeled.end(), j) != unlabeled.end();
        entries.push_back({sigma.positive[j - 1] - at_least(unlabeled, j), !plain});
    }
    XLabeledPartition lambda;
    try {
        lambda = XLabeledPartition(std::move(entries));
    } catch (const StructureError& e) {
        throw IntegrityError(std::string("g2 inverse: reconstruction is malformed (") + e.what() +
                             ")");
    }
    require_codomain(Family::A, lambda,
                     {sigma.weight(), -1, sigma.positive_length() - sigma.negative_length()});
    return lambda;
}

// ---------------------------------------------------------------------------
// h

std::vector<HSlot> h_sequence(const PartitionPair& pair)
{
    require_domain(Family::C, pair);
    const int k = pair.beta.length();
    std::vector<HSlot> seq;
    if (k == 0) {
        for (int v : pair.alpha)
            seq.push_back({v, Color::blue, -1});
        return seq;
    }

    // Step 1: parts of alpha not exceeding k are removed and spread over
    // beta; beta'_j gains one for every removed part >= j.
    std::vector<int> removed;
    for (int v : pair.alpha) {
        if (v > k)
            seq.push_back({v, Color::blue, -1});
        else
            removed.push_back(v);
    }
    std::vector<int> beta1;
    int removed_weight = 0;
    for (int v : removed)
        removed_weight += v;
    for (int j = 1; j <= k; ++j)
        beta1.push_back(pair.beta[j - 1] + at_least(removed, j));
    int beta1_weight = 0;
    for (int v : beta1)
        beta1_weight += v;
    if (beta1_weight != pair.beta.weight() + removed_weight)
        throw IntegrityError("h step 1 does not preserve weight");

    // Steps 2 and 3: split beta'_j into ceil/2 blue + floor/2 red, append the
    // pair and move it forward while the preceding part is smaller than its
    // blue, or equal to it and blue.
    for (int j = 0; j < k; ++j) {
        const int b = beta1[j];
        seq.push_back({(b + 1) / 2, Color::blue, j});
        seq.push_back({b / 2, Color::red, j});
        std::size_t i = seq.size() - 2;
        while (i > 0) {
            const HSlot prev = seq[i - 1];
            const int v = seq[i].value;
            const bool move = prev.value < v || (prev.value == v && prev.color == Color::blue);
            if (!move)
                break;
            if (prev.color == Color::red || prev.pair >= 0)
                throw IntegrityError("h: forward adjustment would pass another pair");
            if (prev.value == 1)
                throw IntegrityError("h: forward adjustment would create a zero part");
            const int blue = seq[i].value, red = seq[i + 1].value;
            // a + c + c_r -> (c+1) + c_r + (a-1);  a + c + (c-1)_r -> c + c_r + (a-1)
            const int new_blue = blue == red ? blue + 1 : blue;
            const int new_red = blue == red ? red : red + 1;
            seq[i - 1] = {new_blue, Color::blue, j};
            seq[i] = {new_red, Color::red, j};
            seq[i + 1] = {prev.value - 1, Color::blue, -1};
            --i;
        }
    }
    return seq;
}

BicoloredPartition apply_h(const PartitionPair& pair)
{
    const auto seq = h_sequence(pair);
    std::vector<ColoredPart> entries;
    for (const auto& s : seq)
        entries.push_back({s.value, s.color});
    BicoloredPartition lambda;
    try {
        lambda = BicoloredPartition::canonical(std::move(entries));
    } catch (const StructureError& e) {
        throw IntegrityError(std::string("h: malformed image (") + e.what() + ")");
    }
    require_codomain(Family::B, lambda, {pair.weight(), -1, pair.beta.length()});
    return lambda;
}

namespace {

struct Unit {
    int blue = 0;
    int red = 0; // 0 for a plain blue part
};

/// Undoes steps 3, 2 and 1 of h for one fixed red-to-blue pairing.
/// Returns false when the pairing cannot come from h.
bool undo_h(std::vector<Unit> units, PartitionPair& out)
{
    std::sort(units.begin(), units.end(),
              [](const Unit& a, const Unit& b) { return a.blue > b.blue; });

    std::vector<int> beta1_rev; // beta'_k first
    for (;;) {
        std::size_t p = units.size();
        for (std::size_t i = units.size(); i-- > 0;)
            if (units[i].red > 0) {
                p = i;
                break;
            }
        if (p == units.size())
            break;
        // Backward adjustments until the pair is last:
        // (c + c_r) + a -> (a+1) + (c + (c-1)_r);  ((c+1) + c_r) + a -> (a+1) + (c + c_r)
        while (p + 1 < units.size()) {
            const Unit next = units[p + 1];
            if (next.red > 0)
                return false;
            Unit moved = units[p];
            if (moved.blue == moved.red) {
                if (moved.red == 1)
                    return false;
                moved.red -= 1;
            } else {
                moved.blue = moved.red;
            }
            units[p] = {next.blue + 1, 0};
            units[p + 1] = moved;
            ++p;
        }
        beta1_rev.push_back(units.back().blue + units.back().red);
        units.pop_back();
    }

    const int k = static_cast<int>(beta1_rev.size());
    std::vector<int> beta1(beta1_rev.rbegin(), beta1_rev.rend());
    std::vector<int> alpha;
    for (const auto& u : units)
        alpha.push_back(u.blue);

    // Undo step 1: beta_j = beta'_j - c_j must be even, and c_j - c_{j+1}
    // marks whether j was a removed part of alpha.
    std::vector<int> beta(static_cast<std::size_t>(k));
    int c = 0;
    for (int j = k; j >= 1; --j) {
        if ((beta1[j - 1] - c) % 2 != 0) {
            ++c;
            alpha.push_back(j);
        }
        beta[j - 1] = beta1[j - 1] - c;
        if (beta[j - 1] < 2)
            return false;
    }
    std::sort(alpha.begin(), alpha.end(), std::greater<>());
    try {
        out = PartitionPair{Partition(std::move(alpha)), Partition(std::move(beta))};
    } catch (const StructureError&) {
        return false;
    }
    return static_cast<bool>(check_C(out));
}

} // namespace

std::vector<PartitionPair> h_preimages(const BicoloredPartition& lambda)
{
    require_domain(Family::B, lambda);
    const auto& e = lambda.entries();
    std::vector<std::size_t> reds, blues;
    for (std::size_t i = 0; i < e.size(); ++i)
        (e[i].color == Color::red ? reds : blues).push_back(i);

    std::vector<PartitionPair> found;
    std::vector<int> partner(reds.size(), -1); // red slot -> blue slot
    std::vector<char> used(blues.size(), 0);

    std::function<void(std::size_t)> choose = [&](std::size_t r) {
        if (r == reds.size()) {
            std::vector<Unit> units;
            for (std::size_t b = 0; b < blues.size(); ++b) {
                Unit u{e[blues[b]].value, 0};
                for (std::size_t q = 0; q < reds.size(); ++q)
                    if (partner[q] == static_cast<int>(b))
                        u.red = e[reds[q]].value;
                units.push_back(u);
            }
            PartitionPair candidate;
            if (!undo_h(std::move(units), candidate))
                return;
            try {
                if (apply_h(candidate) != lambda)
                    return;
            } catch (const Error&) {
                return;
            }
            if (std::find(found.begin(), found.end(), candidate) == found.end())
                found.push_back(std::move(candidate));
            return;
        }
        const int c = e[reds[r]].value;
        for (std::size_t b = 0; b < blues.size(); ++b) {
            const int v = e[blues[b]].value;
            if (used[b] || (v != c && v != c + 1))
                continue;
            used[b] = 1;
            partner[r] = static_cast<int>(b);
            choose(r + 1);
            partner[r] = -1;
            used[b] = 0;
        }
    };
    choose(0);
    std::sort(found.begin(), found.end(), std::greater<>());
    return found;
}

PartitionPair apply_h_inv(const BicoloredPartition& lambda)
{
    auto found = h_preimages(lambda);
    if (found.empty())
        throw IntegrityError("h inverse: no preimage of " + to_text(lambda));
    if (found.size() > 1)
        throw BijectivityError("h inverse: " + std::to_string(found.size()) +
                               " preimages of " + to_text(lambda));
    return std::move(found.front());
}

// ---------------------------------------------------------------------------

std::string_view bijection_name(Bijection b)
{
    switch (b) {
    case Bijection::f1: return "f1";
    case Bijection::f2: return "f2";
    case Bijection::g1: return "g1";
    case Bijection::g2: return "g2";
    case Bijection::h: return "h";
    }
    return "?";
}

Bijection parse_bijection(std::string_view tag)
{
    for (Bijection b : all_bijections)
        if (bijection_name(b) == tag)
            return b;
    throw UsageError("unknown bijection '" + std::string(tag) + "'");
}

Family domain_of(Bijection b)
{
    switch (b) {
    case Bijection::f1:
    case Bijection::f2: return Family::ped;
    case Bijection::g1: return Family::V;
    case Bijection::g2: return Family::A;
    case Bijection::h: return Family::C;
    }
    throw UsageError("unknown bijection");
}

Family codomain_of(Bijection b)
{
    switch (b) {
    case Bijection::f1: return Family::F;
    case Bijection::f2: return Family::F_signed;
    case Bijection::g1: return Family::A;
    case Bijection::g2: return Family::A_signed;
    case Bijection::h: return Family::B;
    }
    throw UsageError("unknown bijection");
}

namespace {

template <class T>
const T& expect(const FamilyValue& v, Bijection b)
{
    if (const T* p = std::get_if<T>(&v))
        return *p;
    throw DomainError("wrong object type for " + std::string(bijection_name(b)));
}

} // namespace

FamilyValue apply_forward(Bijection b, const FamilyValue& v)
{
    switch (b) {
    case Bijection::f1: return apply_f1(expect<Partition>(v, b));
    case Bijection::f2: return apply_f2(expect<Partition>(v, b));
    case Bijection::g1: return apply_g1(expect<PartitionPair>(v, b));
    case Bijection::g2: return apply_g2(expect<XLabeledPartition>(v, b));
    case Bijection::h: return apply_h(expect<PartitionPair>(v, b));
    }
    throw UsageError("unknown bijection");
}

FamilyValue apply_inverse(Bijection b, const FamilyValue& v)
{
    switch (b) {
    case Bijection::f1: return apply_f1_inv(expect<FPartition>(v, b));
    case Bijection::f2: return apply_f2_inv(expect<SignedPartition>(v, b));
    case Bijection::g1: return apply_g1_inv(expect<XLabeledPartition>(v, b));
    case Bijection::g2: return apply_g2_inv(expect<SignedPartition>(v, b));
    case Bijection::h: return apply_h_inv(expect<BicoloredPartition>(v, b));
    }
    throw UsageError("unknown bijection");
}

} // namespace parteq
