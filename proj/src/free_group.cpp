#include "twistkit/free_group.hpp"

#include <cstdlib>
#include <sstream>

namespace twistkit {

std::string gen_name(Gen g)
{
    const int a = std::abs(g);
    const int handle = (a + 1) / 2;
    std::string s = (a % 2 == 1) ? "x" : "y";
    if (g < 0) s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s + std::to_string(handle);
}

FreeWord::FreeWord(const std::vector<Gen>& letters)
{
    letters_.reserve(letters.size());
    for (Gen g : letters) push(g);
}

void FreeWord::push(Gen g)
{
    if (!letters_.empty() && letters_.back() == -g)
        letters_.pop_back();
    else
        letters_.push_back(g);
}

void FreeWord::append(const FreeWord& w)
{
    for (Gen g : w.letters_) push(g);
}

void FreeWord::append_inverse(const FreeWord& w)
{
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
}

FreeWord FreeWord::inverse() const
{
    FreeWord out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
}

std::string FreeWord::to_string() const
{
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) os << (i ? " " : "") << gen_name(letters_[i]);
    return os.str();
}

FreeWord operator*(const FreeWord& a, const FreeWord& b)
{
    FreeWord out = a;
    out.append(b);
    return out;
}

FreeWord reduce(const std::vector<Gen>& letters) { return FreeWord(letters); }

FreeWord boundary_word(int genus)
{
    std::vector<Gen> r;
    for (int i = 1; i <= genus; ++i) {
        const Gen x = 2 * i - 1, y = 2 * i;
        r.insert(r.end(), {x, y, -x, -y});
    }
    return FreeWord(r);
}

}  // namespace twistkit
