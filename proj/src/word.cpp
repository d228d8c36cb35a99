#include "hankel/word.hpp"

#include <stdexcept>

namespace hankel::seq {

namespace {

// One whole application of tau to a buffer that is a prefix of s. tau is
// prefix-preserving (tau(1) starts with 1), so the image is again a prefix.
std::vector<std::uint8_t> apply_tau(const std::vector<std::uint8_t>& in) {
  std::vector<std::uint8_t> out;
  out.reserve(in.size() * 3);
  for (const std::uint8_t c : in) {
    if (c) {
      out.push_back(1);
      out.push_back(0);
      out.push_back(1);
    } else {
      out.push_back(1);
    }
  }
  return out;
}

}  // namespace

std::shared_ptr<const std::vector<std::uint8_t>> sturmian_word::prefix(i64 len) const {
  if (len < 0) throw std::invalid_argument("sturmian_word::prefix: negative length");
  std::lock_guard<std::mutex> lock(mu_);
  if (!buf_) buf_ = std::make_shared<const std::vector<std::uint8_t>>(1, std::uint8_t{1});
  while (static_cast<i64>(buf_->size()) < len)
    buf_ = std::make_shared<const std::vector<std::uint8_t>>(apply_tau(*buf_));
  return buf_;
}

std::uint8_t sturmian_word::at(i64 n) const {
  if (n < 0) throw std::invalid_argument("sturmian_word::at: negative index");
  const auto snap = prefix(checked_add(n, 1, "sturmian_word::at"));
  return (*snap)[static_cast<std::size_t>(n)];
}

sturmian_word& word() {
  static sturmian_word w;
  return w;
}

std::vector<std::uint8_t> s_prefix(i64 len) {
  const auto snap = word().prefix(len);
  return {snap->begin(), snap->begin() + static_cast<std::ptrdiff_t>(len)};
}

}  // namespace hankel::seq
