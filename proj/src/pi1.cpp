#include "twistkit/pi1.hpp"

#include <future>
#include <memory>
#include <mutex>

#include "twistkit/homology.hpp"
#include "twistkit/hyperelliptic.hpp"

namespace twistkit {

namespace {

std::vector<CurveId> table_curves(int genus)
{
    std::vector<CurveId> cs;
    for (int i = 1; i <= genus; ++i) {
        cs.push_back(CurveId::a(i));
        cs.push_back(CurveId::b(i));
    }
    for (int k = 2; k <= genus; ++k) {
        cs.push_back(CurveId::d(k));
        cs.push_back(CurveId::e(k));
    }
    cs.push_back(CurveId::delta());
    return cs;
}

void check_cap(const FreeWord& w, std::size_t cap)
{
    if (w.size() > cap) throw WordGrowthExceeded(cap);
}

FreeWord apply_letter(const TwistTable& table, const Letter& l, const FreeWord& w, std::size_t cap)
{
    FreeWord out;
    for (Gen z : w.letters()) {
        out.append(table.image(l.base, l.sign, z));
        check_cap(out, cap);
    }
    return out;
}

void check_letters(const Twist& t, const SurfaceSig& sig)
{
    auto check = [&](CurveId c) {
        if (!is_valid(c, sig))
            throw InvalidCurve("curve " + curve_name(c) + " is not valid on surface " + sig.to_string());
    };
    check(t.base);
    for (const Letter& l : t.conj) check(l.base);
}

enum class GenResult { Same, Different, Capped };

Verdict combine(const std::vector<GenResult>& results, const char* engine)
{
    Verdict v;
    v.engine = engine;
    v.exact = true;
    v.outcome = Outcome::Equal;
    for (GenResult r : results) {
        if (r == GenResult::Different) {
            v.outcome = Outcome::NotEqual;
            return v;
        }
        if (r == GenResult::Capped) v.outcome = Outcome::Unknown;
    }
    if (v.outcome == Outcome::Unknown) v.exact = false;
    return v;
}

template <class Fn>
std::vector<GenResult> per_generator(int genus, Fn fn)
{
    std::vector<std::future<GenResult>> futures;
    for (Gen k = 1; k <= 2 * genus; ++k) futures.push_back(std::async(std::launch::async, fn, k));
    std::vector<GenResult> out;
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace

TwistTable::TwistTable(int genus) : genus_(genus), abel_(static_cast<std::size_t>(2 * genus), static_cast<std::size_t>(2 * genus))
{
    const auto basis = hyperelliptic::basis(genus);
    for (std::size_t k = 0; k < basis.size(); ++k) abel_.set_column(k, hyperelliptic::chain_coordinates(basis[k], genus));
    for (CurveId c : table_curves(genus)) {
        for (int sign : {1, -1}) {
            std::vector<FreeWord> imgs;
            for (const auto& z : basis) {
                FreeWord img = hyperelliptic::to_free(hyperelliptic::act(c, sign, z, genus), genus);
                FreeWord inv = img.inverse();
                imgs.push_back(std::move(img));
                imgs.push_back(std::move(inv));
            }
            images_.emplace(std::make_pair(c, sign), std::move(imgs));
        }
    }
}

const TwistTable& TwistTable::get(int genus)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<TwistTable>> cache;
    if (genus < 1) throw std::invalid_argument("TwistTable: genus must be >= 1");
    std::lock_guard lock(mu);
    auto& slot = cache[genus];
    if (!slot) slot.reset(new TwistTable(genus));
    return *slot;
}

const FreeWord& TwistTable::image(CurveId c, int sign, Gen k) const
{
    auto it = images_.find({c, sign > 0 ? 1 : -1});
    if (it == images_.end()) throw InvalidCurve("no twist automorphism for curve " + curve_name(c));
    const int a = k > 0 ? k : -k;
    if (a < 1 || a > 2 * genus_) throw std::out_of_range("generator index out of range");
    return it->second[2 * static_cast<std::size_t>(a - 1) + (k > 0 ? 0 : 1)];
}

IntVec abelianize(const FreeWord& w, int genus)
{
    const IntMatrix& ab = TwistTable::get(genus).abelianization();
    IntVec coeff(static_cast<std::size_t>(2 * genus), BigInt(0));
    for (Gen g : w.letters()) coeff[static_cast<std::size_t>(std::abs(g) - 1)] += (g > 0 ? 1 : -1);
    return ab.apply(coeff);
}

FreeWord apply_twist(const Twist& t, const FreeWord& w, const SurfaceSig& sig, std::size_t cap)
{
    check_letters(t, sig);
    const TwistTable& table = TwistTable::get(sig.genus);
    FreeWord cur = w;
    for (const Letter& l : t.expand()) cur = apply_letter(table, l, cur, cap);
    return cur;
}

FreeWord apply_word(const TwistWord& tw, const FreeWord& w, std::size_t cap)
{
    const TwistTable& table = TwistTable::get(tw.surface.genus);
    FreeWord cur = w;
    for (const Twist& t : tw.letters) {
        check_letters(t, tw.surface);
        for (const Letter& l : t.expand()) cur = apply_letter(table, l, cur, cap);
    }
    return cur;
}

DehnReducer::DehnReducer(int genus) : genus_(genus)
{
    if (genus < 2) throw std::invalid_argument("DehnReducer: genus must be >= 2");
    rel_ = boundary_word(genus).letters();
    rel_inv_ = boundary_word(genus).inverse().letters();
    pos_rel_.assign(rel_.size(), -1);
    pos_inv_.assign(rel_.size(), -1);
    for (std::size_t i = 0; i < rel_.size(); ++i) {
        pos_rel_[slot(rel_[i])] = static_cast<int>(i);
        pos_inv_[slot(rel_inv_[i])] = static_cast<int>(i);
    }
}

FreeWord DehnReducer::reduce(const FreeWord& w) const
{
    struct Entry {
        Gen g;
        int run_rel;
        int run_inv;
    };
    const int n = static_cast<int>(rel_.size());
    const int limit = n / 2 + 1;  // more than half of the relator
    std::vector<Entry> stack;
    stack.reserve(w.size());
    // Pending letters, consumed from the back.
    std::vector<Gen> pending(w.letters().rbegin(), w.letters().rend());

    auto follows = [&](const std::vector<int>& pos, const std::vector<Gen>& seq, Gen prev, Gen next) {
        const int i = pos[slot(prev)];
        return seq[static_cast<std::size_t>((i + 1) % n)] == next;
    };

    while (!pending.empty()) {
        const Gen g = pending.back();
        pending.pop_back();
        if (!stack.empty() && stack.back().g == -g) {
            stack.pop_back();
            continue;
        }
        Entry e{g, 1, 1};
        if (!stack.empty()) {
            const Entry& top = stack.back();
            if (follows(pos_rel_, rel_, top.g, g)) e.run_rel = top.run_rel + 1;
            if (follows(pos_inv_, rel_inv_, top.g, g)) e.run_inv = top.run_inv + 1;
        }
        stack.push_back(e);
        const bool on_rel = e.run_rel >= limit;
        if (!on_rel && e.run_inv < limit) continue;

        // The last `limit` letters u are a piece of a cyclic conjugate u v of the
        // relator; replace u by v^{-1}.
        const std::vector<Gen>& seq = on_rel ? rel_ : rel_inv_;
        const int end = (on_rel ? pos_rel_ : pos_inv_)[slot(g)];
        stack.resize(stack.size() - static_cast<std::size_t>(limit));
        // v = seq[end+1 .. end+n-limit]; push v^{-1} = reverse inverse, so its
        // first letter is -seq[end+n-limit].
        for (int t = 1; t <= n - limit; ++t) pending.push_back(-seq[static_cast<std::size_t>((end + t) % n)]);
    }
    std::vector<Gen> out;
    out.reserve(stack.size());
    for (const Entry& e : stack) out.push_back(e.g);
    return FreeWord(out);
}

Verdict mcg_equal_rel_boundary(const TwistWord& a, const TwistWord& b, std::size_t cap)
{
    if (a.surface != b.surface) throw std::invalid_argument("mcg_equal_rel_boundary: words on different surfaces");
    if (a.surface.boundary != 1) throw std::invalid_argument("mcg_equal_rel_boundary: surface must have one boundary component");
    a.validate();
    b.validate();
    auto results = per_generator(a.surface.genus, [&](Gen k) {
        try {
            const FreeWord z = FreeWord::generator(k);
            return apply_word(a, z, cap) == apply_word(b, z, cap) ? GenResult::Same : GenResult::Different;
        } catch (const WordGrowthExceeded&) {
            return GenResult::Capped;
        }
    });
    return combine(results, engine_name::pi1_boundary);
}

Verdict closed_equal(const TwistWord& a, const TwistWord& b, std::size_t cap)
{
    if (a.surface != b.surface) throw std::invalid_argument("closed_equal: words on different surfaces");
    if (!a.surface.closed()) throw std::invalid_argument("closed_equal: surface must be closed");
    a.validate();
    b.validate();
    if (a.surface.genus == 1) return homology_equal(a, b);

    const TwistTable& table = TwistTable::get(a.surface.genus);
    const DehnReducer dehn(a.surface.genus);
    auto image = [&](const TwistWord& tw, const FreeWord& z) {
        FreeWord cur = z;
        for (const Twist& t : tw.letters)
            for (const Letter& l : t.expand()) cur = dehn.reduce(apply_letter(table, l, cur, cap));
        return cur;
    };
    std::vector<FreeWord> diff;  // images under a followed by b^{-1}
    try {
        const TwistWord c = a * b.inverse();
        std::vector<std::future<FreeWord>> futures;
        for (Gen k = 1; k <= 2 * a.surface.genus; ++k)
            futures.push_back(std::async(std::launch::async, [&, k] { return image(c, FreeWord::generator(k)); }));
        for (auto& f : futures) diff.push_back(f.get());
    } catch (const WordGrowthExceeded&) {
        return combine({GenResult::Capped}, engine_name::pi1_closed);
    }

    // diff must be conjugation by some h (a point push). h = 1 is the pointed comparison.
    auto conjugates_all = [&](const FreeWord& h) {
        for (std::size_t k = 0; k < diff.size(); ++k) {
            FreeWord q = h.inverse();
            q.append(diff[k]);
            q.append(h);
            q.push(-static_cast<Gen>(k + 1));
            if (!dehn.is_trivial(q)) return false;
        }
        return true;
    };
    if (conjugates_all(FreeWord())) return combine({GenResult::Same}, engine_name::pi1_closed);
    for (std::size_t k = 0; k < diff.size(); ++k) {
        const auto& u = diff[k].letters();
        const Gen z = static_cast<Gen>(k + 1);
        for (std::size_t len = 1; len <= u.size(); ++len) {
            FreeWord h(std::vector<Gen>(u.begin(), u.begin() + static_cast<long>(len)));
            for (int shift : {0, 1, -1}) {
                FreeWord cand = h;
                if (shift) cand.push(shift * z);
                if (conjugates_all(cand)) return combine({GenResult::Same}, engine_name::pi1_closed);
            }
        }
    }
    return combine({GenResult::Different}, engine_name::pi1_closed);
}

}  // namespace twistkit
