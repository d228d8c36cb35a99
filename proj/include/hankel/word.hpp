#pragma once

// The fixed point s of the substitution tau: 1 -> 101, 0 -> 1, materialized
// by repeated whole-word applications of tau so every buffer is a
// substitution-aligned prefix. This module is deliberately self-contained:
// the determinant oracle reads the word only through it, never through the
// numeration shortcut.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "hankel/checked.hpp"

namespace hankel::seq {

class sturmian_word {
 public:
  // Immutable snapshot holding at least `len` symbols (usually more: the
  // buffer grows by whole tau-applications). Safe to keep and read while
  // other threads extend the word.
  std::shared_ptr<const std::vector<std::uint8_t>> prefix(i64 len) const;

  // s_n read through a substitution-expanded prefix.
  std::uint8_t at(i64 n) const;

 private:
  mutable std::mutex mu_;
  mutable std::shared_ptr<const std::vector<std::uint8_t>> buf_;
};

// Process-wide word shared by all readers.
sturmian_word& word();

// Copy of the first `len` symbols of s.
std::vector<std::uint8_t> s_prefix(i64 len);

}  // namespace hankel::seq
