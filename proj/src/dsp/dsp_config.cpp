#include "neolightning/dsp/dsp_config.hpp"

#include <stdexcept>
#include <string>

namespace nl::dsp {
namespace {

void require(bool ok, const char* field) {
  if (!ok) throw std::invalid_argument(std::string("dsp.") + field + " out of range");
}

}  // namespace

void DspConfig::validate() const {
  require(sample_rate >= 8000.0 && sample_rate <= 384000.0, "sample_rate");
  require(block_size >= 16 && block_size <= 8192, "block_size");
  require(xmod_depth >= 0.0 && xmod_depth < 1.0, "xmod_depth");
  require(filter_q >= 0.5 && filter_q <= 10.0, "filter_q");
  require(smoothing_ms > 0.0, "smoothing_ms");
  require(pan >= 0.0 && pan <= 1.0, "pan");
  require(reverb_mix >= 0.0 && reverb_mix <= 1.0, "reverb_mix");
  require(max_feedback > 0.0 && max_feedback < 1.0, "max_feedback");
  require(fade_ms > 0.0, "fade_ms");
}

}  // namespace nl::dsp
