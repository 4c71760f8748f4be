#include "annlab/simulator.hpp"

#include <cstdlib>
#include <limits>

namespace annlab {

namespace {

constexpr std::size_t kDenseLimit = 2048;

// Scaled integer row, or false if it does not fit int32 headroom.
bool scale_row(const std::map<NeuronId, Rational>& row, std::vector<std::pair<NeuronId, std::int32_t>>& out) {
  BigInt d = 1;
  for (const auto& [i, w] : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), w.den().get_mpz_t());
  BigInt total = 0;
  const BigInt limit = std::numeric_limits<std::int32_t>::max() / 2;
  for (const auto& [i, w] : row) {
    BigInt v = w.num() * (d / w.den());
    total += abs(v);
    if (total > limit) return false;
    out.emplace_back(i, static_cast<std::int32_t>(v.get_si()));
  }
  return true;
}

}  // namespace

Simulator::Simulator(Network net, Engine engine, const kernels::Kernel* kernel)
    : net_(std::move(net)), engine_(engine) {
  if (engine_ == Engine::Reference) return;
  kernel_ = kernel ? kernel : &kernels::best();
  n_ = net_.size() - 1;
  stride_ = (n_ + kernels::kLanes - 1) / kernels::kLanes * kernels::kLanes;
  sparse_ = n_ > kDenseLimit;
  bias_.assign(stride_, 0);
  silent_.assign(n_, 0);
  if (sparse_) sparse_cols_.assign(n_ + 1, {});
  else dense_.assign((n_ + 1) * stride_, 0);
  for (NeuronId j = 1; j <= n_; ++j) {
    if (net_.is_input(j)) {
      silent_[j - 1] = 1;
      continue;
    }
    const auto& row = net_.row(j);
    std::vector<std::pair<NeuronId, std::int32_t>> scaled;
    if (row.count(net_.analog()) || !scale_row(row, scaled)) {
      exact_rows_.push_back(j);
      continue;
    }
    for (const auto& [i, v] : scaled) {
      if (i == 0) bias_[j - 1] = v;
      else if (sparse_) sparse_cols_[i].emplace_back(static_cast<std::uint32_t>(j - 1), v);
      else dense_[i * stride_ + (j - 1)] = v;
    }
  }
  acc_.assign(stride_, 0);
  fired_.assign(stride_, 0);
}

Rational Simulator::exact_excitation(NeuronId j, const Configuration& cfg) const {
  Rational xi;
  for (const auto& [i, w] : net_.row(j)) {
    if (i == 0) xi += w;
    else if (i == net_.analog()) xi += w * cfg.analog;
    else if (cfg.binary[i - 1]) xi += w;
  }
  return xi;
}

Configuration Simulator::step(const Configuration& cfg) const {
  if (engine_ == Engine::Reference) return annlab::step(net_, cfg);
  std::copy(bias_.begin(), bias_.end(), acc_.begin());
  for (NeuronId i = 1; i <= n_; ++i) {
    if (!cfg.binary[i - 1]) continue;
    if (sparse_) {
      for (const auto& [j, v] : sparse_cols_[i]) acc_[j] += v;
    } else {
      kernel_->accumulate(acc_.data(), dense_.data() + i * stride_, stride_);
    }
  }
  kernel_->threshold(acc_.data(), fired_.data(), stride_);
  Configuration next;
  next.binary.assign(fired_.begin(), fired_.begin() + static_cast<std::ptrdiff_t>(n_));
  for (auto j : exact_rows_) next.binary[j - 1] = exact_excitation(j, cfg).sign() >= 0 ? 1 : 0;
  for (std::size_t j = 0; j < n_; ++j)
    if (silent_[j]) next.binary[j] = 0;
  next.analog = saturate(exact_excitation(net_.analog(), cfg));
  return next;
}

}  // namespace annlab
