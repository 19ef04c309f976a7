#include "clup/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "clup/errors.hpp"
#include "clup/rng.hpp"

namespace clup {

namespace {
// substream ids inside one instance seed
constexpr std::uint64_t kStreamMatrix = 0;
constexpr std::uint64_t kStreamSignal = 1;
constexpr std::uint64_t kStreamNoise = 2;
constexpr std::uint64_t kStreamInit = 3;
}  // namespace

SystemInstance generate_instance(int n, double alpha, double sigma, std::uint64_t seed) {
  if (n < 1) throw InvalidDimension("generate_instance: n must be >= 1");
  if (alpha <= 0) throw InvalidDimension("generate_instance: alpha must be > 0");
  if (sigma < 0) throw InvalidDimension("generate_instance: sigma must be >= 0");
  int m = static_cast<int>(std::llround(alpha * n));
  if (m < 1) throw InvalidDimension("generate_instance: round(alpha*n) < 1");

  SystemInstance inst;
  inst.n = n;
  inst.m = m;
  inst.alpha = alpha;
  inst.sigma = sigma;

  Philox rng_A(seed, kStreamMatrix);
  inst.A.resize(m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) inst.A(i, j) = rng_A.next_normal();

  Philox rng_x(seed, kStreamSignal);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  inst.x_sol.resize(n);
  for (int i = 0; i < n; ++i) inst.x_sol[i] = (rng_x.next_u32() & 1u) ? s : -s;

  Philox rng_v(seed, kStreamNoise);
  inst.v.resize(m);
  for (int i = 0; i < m; ++i) inst.v[i] = rng_v.next_normal();

  inst.y = inst.A * inst.x_sol + sigma * inst.v;
  return inst;
}

Eigen::VectorXd make_initial(const ClupConfig& config, const SystemInstance& instance) {
  const int n = instance.n;
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  Eigen::VectorXd x0(n);

  if (const auto* rs = std::get_if<RandomSignInit>(&config.init)) {
    Philox rng(rs->seed, kStreamInit);
    for (int i = 0; i < n; ++i) x0[i] = (rng.next_u32() & 1u) ? s : -s;
    return x0;
  }
  if (const auto* fv = std::get_if<FixedVectorInit>(&config.init)) {
    if (fv->x0.size() != n) throw InvalidDimension("make_initial: fixed vector has wrong length");
    return fv->x0;
  }
  const auto& af = std::get<AgreementFractionInit>(config.init);
  if (af.rho < 0.0 || af.rho > 1.0) throw DomainError("make_initial: rho must be in [0,1]");
  int agree = static_cast<int>(std::llround(af.rho * n));
  // agree on a seed-chosen subset, disagree elsewhere (Fisher-Yates on indices)
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  Philox rng(config.seed, kStreamInit);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(idx[i], idx[j]);
  }
  for (int i = 0; i < n; ++i) {
    double sgn = (i < agree) ? 1.0 : -1.0;
    x0[idx[i]] = sgn * instance.x_sol[idx[i]];
  }
  return x0;
}

FileConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  FileConfig fc;
  double rho = 0.5;
  std::string init = "agreement";
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string t) {
      t.erase(0, t.find_first_not_of(" \t\r"));
      auto e = t.find_last_not_of(" \t\r");
      t.erase(e == std::string::npos ? 0 : e + 1);
      return t;
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "n") fc.n = std::stoi(val);
    else if (key == "alpha") fc.alpha = std::stod(val);
    else if (key == "snr_db") fc.clup.snr_db = std::stod(val);
    else if (key == "r_plt") fc.clup.r_plt = std::stod(val);
    else if (key == "r_sc") fc.clup.r_sc = std::stod(val);
    else if (key == "max_iters") fc.clup.max_iters = std::stoi(val);
    else if (key == "seed") fc.clup.seed = std::stoull(val);
    else if (key == "reps") fc.reps = std::stoi(val);
    else if (key == "init") init = val;
    else if (key == "rho") rho = std::stod(val);
    else throw std::runtime_error("unknown config key: " + key);
  }
  if (init == "agreement") fc.clup.init = AgreementFractionInit{rho};
  else if (init == "random") fc.clup.init = RandomSignInit{fc.clup.seed};
  else throw std::runtime_error("unknown init kind: " + init);
  return fc;
}

void save_instance_csv(const SystemInstance& inst, const std::string& path) {
  std::ofstream out(path);
  out.precision(17);
  out << "n,m,alpha,sigma\n"
      << inst.n << ',' << inst.m << ',' << inst.alpha << ',' << inst.sigma << '\n';
  out << "A_colmajor\n";
  for (int j = 0; j < inst.n; ++j)
    for (int i = 0; i < inst.m; ++i) out << inst.A(i, j) << '\n';
  out << "x_sol\n";
  for (int i = 0; i < inst.n; ++i) out << inst.x_sol[i] << '\n';
  out << "v\n";
  for (int i = 0; i < inst.m; ++i) out << inst.v[i] << '\n';
  out << "y\n";
  for (int i = 0; i < inst.m; ++i) out << inst.y[i] << '\n';
}

SystemInstance load_instance_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);
  SystemInstance inst;
  {
    std::stringstream ss(line);
    char c;
    ss >> inst.n >> c >> inst.m >> c >> inst.alpha >> c >> inst.sigma;
  }
  auto read_block = [&](int count, auto&& sink) {
    std::getline(in, line);  // section label
    for (int i = 0; i < count; ++i) {
      std::getline(in, line);
      sink(i, std::stod(line));
    }
  };
  inst.A.resize(inst.m, inst.n);
  read_block(inst.m * inst.n, [&](int k, double val) { inst.A(k % inst.m, k / inst.m) = val; });
  inst.x_sol.resize(inst.n);
  read_block(inst.n, [&](int i, double val) { inst.x_sol[i] = val; });
  inst.v.resize(inst.m);
  read_block(inst.m, [&](int i, double val) { inst.v[i] = val; });
  inst.y.resize(inst.m);
  read_block(inst.m, [&](int i, double val) { inst.y[i] = val; });
  return inst;
}

}  // namespace clup
