#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace skinlab {

/// Letters of the rank-2 free group on generators a, b.
enum class Gen : std::uint8_t { A, Ainv, B, Binv };

Gen inverse(Gen g);
char letter_char(Gen g); // 'a', 'A', 'b', 'B' (uppercase = inverse)

/// Freely reduced word in the free group <a, b>.
struct Word {
    std::vector<Gen> letters;

    /// Parse from a string of a/A/b/B (lowercase = generator, uppercase =
    /// inverse); reduces freely.  Throws std::invalid_argument on other input.
    static Word parse(std::string_view s);

    Word inverse() const;
    std::string str() const;
    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
};

/// Concatenation with free reduction.
Word operator*(const Word& u, const Word& v);
bool operator==(const Word& u, const Word& v);

/// The four curves bounding the pleated pieces of the deformation, and the
/// two pants curves assembled from them.
Word word_delta1(); // a^{-2} b
Word word_delta2(); // b^{-2} a^{-1}
Word word_delta3(); // a b^{-1} a
Word word_delta4(); // a^{-1} b^2 a^2
Word word_xi();     // delta1 * delta3
Word word_eta();    // delta2 * delta4

} // namespace skinlab
