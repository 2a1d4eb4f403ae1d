// Prints S(n) for A=(1,1), B=(2,2) next to its d_n-th circular shift.

#include <iostream>

#include "markovseq/markovseq.hpp"

int main() {
  using namespace markovseq;
  OrderedSequences<Letter> family(Seq{1, 1}, Seq{2, 2});
  for (Index n = 1; n <= 16; ++n) {
    const Seq& s = family.at(n);
    const Seq shifted = rotate(s, stern(n));
    std::cout << "S(" << n << ") = " << format_seq(s) << "  C_" << stern(n) << " = " << format_seq(shifted)
              << (is_palindrome(shifted) ? "  palindrome\n" : "  NOT a palindrome\n");
  }
}
