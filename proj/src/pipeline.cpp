#include "zoneroute/pipeline.hpp"

#include <chrono>

#include "zoneroute/error.hpp"

namespace zoneroute {

CompileResult compile(const Circuit& c, const Hardware& hw,
                      const CompileOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  validate(c);
  validate(hw.params);
  if (options.n_aods < 1) {
    throw Error(ErrorKind::InvalidAodCount, "at least one AOD is required");
  }

  CompileResult r;
  r.plan = plan_stages(c, options.alpha);
  const auto initial = initial_layout(c, hw.layout, options.mode);
  r.schedule =
      build_schedule(r.plan, initial, options.mode, options.n_aods, hw);
  r.report = evaluate(r.schedule, c, hw.params, options.include_1q);

  const auto elapsed = std::chrono::steady_clock::now() - started;
  r.compile_ms =
      std::chrono::duration<double, std::milli>(elapsed).count();
  return r;
}

} // namespace zoneroute
