#include "twistkit/hyperelliptic.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistkit::hyperelliptic {

namespace {

void push(InvWord& out, int a)
{
    if (!out.empty() && out.back() == a)
        out.pop_back();
    else
        out.push_back(a);
}

void require_even(const InvWord& w)
{
    if (w.size() % 2 != 0) throw std::invalid_argument("hyperelliptic: word of odd length is not in pi_1 of the cover");
}

}  // namespace

InvWord reduce(const InvWord& w)
{
    InvWord out;
    out.reserve(w.size());
    for (int a : w) push(out, a);
    return out;
}

InvWord half_twist(int j, int sign, const InvWord& w)
{
    InvWord out;
    out.reserve(w.size() + w.size() / 2);
    for (int a : w) {
        if (a == j) {
            if (sign > 0) {
                push(out, j); push(out, j + 1); push(out, j);
            } else {
                push(out, j + 1);
            }
        } else if (a == j + 1) {
            if (sign > 0) {
                push(out, j);
            } else {
                push(out, j + 1); push(out, j); push(out, j + 1);
            }
        } else {
            push(out, a);
        }
    }
    return out;
}

InvWord sheet_twist(int k, int sheet, int sign, const InvWord& w)
{
    InvWord loop;
    for (int i = 1; i <= 2 * k; ++i) loop.push_back(i);
    InvWord loop_inv(loop.rbegin(), loop.rend());
    if (sign < 0) std::swap(loop, loop_inv);

    InvWord out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const int a = w[pos];
        if (a > 2 * k) {
            push(out, a);
            continue;
        }
        // The path of l_a crosses the loop inward on the current sheet and
        // outward on the other one.
        if (static_cast<int>(pos % 2) == sheet) {
            for (int l : loop) push(out, l);
            push(out, a);
        } else {
            push(out, a);
            for (int l : loop_inv) push(out, l);
        }
    }
    return out;
}

InvWord boundary(int genus)
{
    InvWord p;
    for (int i = 1; i <= 2 * genus + 1; ++i) p.push_back(i);
    InvWord b = p;
    b.insert(b.end(), p.begin(), p.end());
    return reduce(b);
}

InvWord act(CurveId c, int sign, const InvWord& w, int genus)
{
    switch (c.kind) {
    case CurveKind::A:
    case CurveKind::B: return half_twist(*c.chain_position(), sign, w);
    case CurveKind::D: return sheet_twist(c.index, 0, sign, w);
    case CurveKind::E: return sheet_twist(c.index, 1, sign, w);
    case CurveKind::Delta: {
        const InvWord b = boundary(genus);
        InvWord out;
        const InvWord binv(b.rbegin(), b.rend());
        const InvWord& pre = sign > 0 ? b : binv;
        const InvWord& post = sign > 0 ? binv : b;
        for (int a : pre) push(out, a);
        for (int a : w) push(out, a);
        for (int a : post) push(out, a);
        return out;
    }
    }
    return w;
}

std::vector<InvWord> basis(int genus)
{
    std::vector<InvWord> out;
    for (int i = 1; i <= genus; ++i) {
        InvWord x;
        for (int t = 2 * i - 1; t >= 1; --t) x.push_back(t);
        x.push_back(2 * i);
        out.push_back(reduce(x));
        out.push_back({2 * i + 1, 2 * i});
    }
    return out;
}

FreeWord to_free(const InvWord& even, int genus)
{
    require_even(even);
    // m_b = l_1 l_b expressed in the free basis; l_a l_b = m_a^{-1} m_b.
    std::vector<FreeWord> m(static_cast<std::size_t>(2 * genus + 2));
    for (int i = 1; i <= genus; ++i) {
        FreeWord w;
        for (int t = 1; t <= i - 1; ++t) w.push(-(2 * t));
        w.push(2 * i - 1);
        m[static_cast<std::size_t>(2 * i)] = w;
        w.push(-(2 * i));
        m[static_cast<std::size_t>(2 * i + 1)] = w;
    }
    FreeWord out;
    for (std::size_t p = 0; p < even.size(); p += 2) {
        const int a = even[p], b = even[p + 1];
        if (a < 1 || b < 1 || a > 2 * genus + 1 || b > 2 * genus + 1)
            throw std::invalid_argument("hyperelliptic: letter out of range");
        out.append_inverse(m[static_cast<std::size_t>(a)]);
        out.append(m[static_cast<std::size_t>(b)]);
    }
    return out;
}

IntVec chain_coordinates(const InvWord& even, int genus)
{
    require_even(even);
    // l_a l_b (a < b) is u_a ... u_{b-1} with u_j = l_j l_{j+1}; [u_j] = (-1)^j [c_j].
    std::vector<long> u(static_cast<std::size_t>(2 * genus), 0);
    for (std::size_t p = 0; p < even.size(); p += 2) {
        const int a = even[p], b = even[p + 1];
        const int lo = std::min(a, b), hi = std::max(a, b);
        const long s = a < b ? 1 : -1;
        for (int j = lo; j < hi; ++j) u[static_cast<std::size_t>(j - 1)] += s;
    }
    IntVec v(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) v[j] = ((j + 1) % 2 == 0) ? u[j] : -u[j];
    return v;
}

}  // namespace twistkit::hyperelliptic
