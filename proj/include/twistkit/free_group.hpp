#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twistkit {

// Signed free generator: x_i = 2i - 1, y_i = 2i, negative values are inverses.
using Gen = std::int32_t;

std::string gen_name(Gen g);

// Freely reduced word in x_1, y_1, ..., x_g, y_g.
class FreeWord {
public:
    FreeWord() = default;
    explicit FreeWord(const std::vector<Gen>& letters);

    static FreeWord generator(Gen g) { return FreeWord(std::vector<Gen>{g}); }

    const std::vector<Gen>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Append with cancellation against the current end.
    void push(Gen g);
    void append(const FreeWord& w);
    void append_inverse(const FreeWord& w);

    FreeWord inverse() const;
    std::string to_string() const;

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
    bool operator==(const FreeWord&) const = default;

private:
    std::vector<Gen> letters_;
};

FreeWord reduce(const std::vector<Gen>& letters);

// [x1,y1][x2,y2]...[xg,yg] with [x,y] = x y x^-1 y^-1.
FreeWord boundary_word(int genus);

}  // namespace twistkit
