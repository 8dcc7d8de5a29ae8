#include "cldpc/metrics.hpp"

#include <stdexcept>

namespace cldpc {

namespace {

void require_rate(double rate) {
  if (!(rate > 0.0) || !(rate < 1.0)) {
    throw std::invalid_argument("rate must lie strictly between 0 and 1");
  }
}

void require_iavg(double i_avg) {
  if (!(i_avg >= 1.0)) {
    throw std::invalid_argument("average iteration count must be at least 1");
  }
}

}  // namespace

double f_complexity(std::int64_t x, double rate) {
  if (x < 1) throw std::invalid_argument("node degree argument must be >= 1");
  require_rate(rate);
  return 8.0 * (8.0 * static_cast<double>(x) + 12.0 * rate - 11.0) + static_cast<double>(x);
}

double latency_bp(std::int64_t n, std::int64_t lifting) {
  if (n < 1 || lifting < 1) throw std::invalid_argument("n and N must be positive");
  return static_cast<double>(n) * static_cast<double>(lifting);
}

double complexity_bp(double i_avg, std::int64_t m, double rate) {
  require_iavg(i_avg);
  return i_avg * f_complexity(m, rate);
}

double latency_sw(double alpha, std::int64_t memory_order, std::int64_t a) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (memory_order < 0 || a < 1) throw std::invalid_argument("bad window parameters");
  return alpha * static_cast<double>(memory_order + 1) * static_cast<double>(a);
}

double complexity_sw(double alpha, std::int64_t memory_order, double i_avg, std::int64_t c,
                     double rate) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (memory_order < 0) throw std::invalid_argument("memory order must be non-negative");
  require_iavg(i_avg);
  return alpha * static_cast<double>(memory_order + 1) * i_avg * f_complexity(c, rate);
}

double theta_n(std::int64_t n_new, std::int64_t n_star) {
  if (n_new < 1 || n_star < 1) throw std::invalid_argument("lifting degrees must be positive");
  return static_cast<double>(n_new) / static_cast<double>(n_star);
}

double theta_mh(std::int64_t mh_new, std::int64_t mh_star) {
  if (mh_new < 0 || mh_star < 0) throw std::invalid_argument("memory orders must be >= 0");
  return static_cast<double>(mh_new + 1) / static_cast<double>(mh_star + 1);
}

LatencyReport bp_report(std::int64_t n, std::int64_t lifting, std::int64_t m, double rate,
                        double i_avg) {
  LatencyReport r;
  r.scheme = LatencyScheme::bp;
  r.latency_bits = latency_bp(n, lifting);
  r.per_bit_complexity = complexity_bp(i_avg, m, rate);
  r.n = n;
  r.lifting = lifting;
  r.m = m;
  r.i_avg = i_avg;
  r.rate = rate;
  return r;
}

LatencyReport sw_report(std::int64_t a, std::int64_t c, std::int64_t memory_order, double alpha,
                        double rate, double i_avg) {
  LatencyReport r;
  r.scheme = LatencyScheme::sw;
  r.latency_bits = latency_sw(alpha, memory_order, a);
  r.per_bit_complexity = complexity_sw(alpha, memory_order, i_avg, c, rate);
  r.a = a;
  r.c = c;
  r.memory_order = memory_order;
  r.alpha = alpha;
  r.i_avg = i_avg;
  r.rate = rate;
  return r;
}

}  // namespace cldpc
