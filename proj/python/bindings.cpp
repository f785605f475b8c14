#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "neolightning/control/config.hpp"
#include "neolightning/control/engine.hpp"
#include "neolightning/control/script.hpp"
#include "neolightning/dsp/offline.hpp"
#include "neolightning/dsp/wav.hpp"
#include "neolightning/gesture/classifier.hpp"
#include "neolightning/mapping/mapping.hpp"
#include "neolightning/proto/osc_codec.hpp"
#include "neolightning/wand/wand_model.hpp"

namespace py = pybind11;
using namespace nl;

namespace {

using Points = std::vector<std::tuple<float, float, float>>;

Points get_points(const proto::LandmarkFrame& f) {
  Points out;
  out.reserve(f.points.size());
  for (const auto& p : f.points) out.emplace_back(p.x, p.y, p.z);
  return out;
}

void set_points(proto::LandmarkFrame& f, const Points& points) {
  if (points.size() != proto::kLandmarkCount) throw py::value_error("expected 21 landmarks");
  for (std::size_t i = 0; i < points.size(); ++i) {
    f.points[i] = {std::get<0>(points[i]), std::get<1>(points[i]), std::get<2>(points[i])};
  }
}

std::span<const std::uint8_t> as_bytes(const py::bytes& data, std::string& storage) {
  storage = data;
  return {reinterpret_cast<const std::uint8_t*>(storage.data()), storage.size()};
}

py::array_t<float> stereo_array(const std::vector<float>& interleaved) {
  const auto frames = static_cast<py::ssize_t>(interleaved.size() / 2);
  py::array_t<float> out({frames, py::ssize_t{2}});
  std::copy(interleaved.begin(), interleaved.end(), out.mutable_data());
  return out;
}

py::dict snapshot_dict(const control::StateSnapshot& s) {
  py::list wands;
  for (const auto* w : {&s.scene.left, &s.scene.right}) {
    const auto& v = s.params.voice(w->side);
    py::dict d;
    d["side"] = std::string(side_code(w->side));
    d["x"] = w->x;
    d["y"] = w->y;
    d["z"] = w->z;
    d["active"] = w->active;
    d["radius"] = w->radius;
    d["freq_hz"] = v.freq;
    d["amp"] = v.amp;
    d["cutoff_hz"] = v.cutoff;
    d["rt60_s"] = v.rt60;
    wands.append(d);
  }
  py::dict out;
  out["seq"] = s.seq;
  out["t_us"] = s.time.count();
  out["wands"] = wands;
  out["overlap"] = s.overlap;
  out["xmod"] = s.params.xmod;
  out["diag"] = py::dict(py::arg("nan_resets") = s.diag.nan_resets, py::arg("dropped_frames") = s.diag.dropped_frames,
                         py::arg("ignored_keys") = s.diag.ignored_keys);
  return out;
}

template <typename T>
std::string repr_wand(const T& w) {
  std::ostringstream out;
  out << "WandState(side=" << side_code(w.side) << ", x=" << w.x << ", y=" << w.y << ", z=" << w.z
      << ", active=" << (w.active ? "True" : "False") << ", radius=" << w.radius << ")";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "NeoLightning engine core";
  m.attr("__version__") = "0.1.0";

  py::enum_<Side>(m, "Side").value("Left", Side::Left).value("Right", Side::Right);

  // ---- protocol -----------------------------------------------------------
  py::class_<proto::LandmarkFrame>(m, "LandmarkFrame")
      .def(py::init<>())
      .def_readwrite("side", &proto::LandmarkFrame::side)
      .def_readwrite("seq", &proto::LandmarkFrame::seq)
      .def_readwrite("confidence", &proto::LandmarkFrame::confidence)
      .def_property("points", &get_points, &set_points, "21 (x, y, z) tuples")
      .def(py::self == py::self);

  py::register_exception<proto::ValidationError>(m, "ValidationError", PyExc_ValueError);
  // Raised by hand below; the module attribute keeps the class alive.
  const py::handle decode_error = py::exception<proto::DecodeError>(m, "DecodeError", PyExc_ValueError);

  m.attr("ENCODED_FRAME_SIZE") = proto::kEncodedFrameSize;
  m.def("encode_frame", [](const proto::LandmarkFrame& f) {
    const auto bytes = proto::encode_frame(f);
    return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  });
  m.def(
      "decode_frame",
      [decode_error](const py::bytes& data) -> py::object {
        std::string storage;
        const auto result = proto::decode_frame(as_bytes(data, storage));
        if (const auto* f = std::get_if<proto::LandmarkFrame>(&result)) return py::cast(*f);
        if (std::holds_alternative<proto::Ignored>(result)) return py::none();
        const auto& e = std::get<proto::DecodeError>(result);
        const char* kind = e.kind == proto::DecodeError::Kind::MalformedMessage ? "MalformedMessage" : "InvalidFrame";
        PyErr_SetString(decode_error.ptr(), (std::string(kind) + " at offset " + std::to_string(e.offset) +
                                             (e.field.empty() ? "" : " (" + e.field + ")") + ": " + e.message)
                                                .c_str());
        throw py::error_already_set();
      },
      "Returns a LandmarkFrame, or None for messages addressed elsewhere. Raises DecodeError.");

  // ---- gestures -----------------------------------------------------------
  py::class_<gesture::GestureConfig>(m, "GestureConfig")
      .def(py::init<>())
      .def_readwrite("theta_open", &gesture::GestureConfig::theta_open)
      .def_readwrite("theta_close", &gesture::GestureConfig::theta_close)
      .def_readwrite("repeat_ms", &gesture::GestureConfig::repeat_ms)
      .def_readwrite("move_deadzone", &gesture::GestureConfig::move_deadzone)
      .def_readwrite("max_step", &gesture::GestureConfig::max_step)
      .def_readwrite("swipe_dist", &gesture::GestureConfig::swipe_dist)
      .def_readwrite("swipe_window_ms", &gesture::GestureConfig::swipe_window_ms)
      .def_readwrite("swipe_refractory_ms", &gesture::GestureConfig::swipe_refractory_ms);

  py::enum_<gesture::GestureKind>(m, "GestureKind")
      .value("MoveDelta", gesture::GestureKind::MoveDelta)
      .value("OpenHand", gesture::GestureKind::OpenHand)
      .value("CloseHand", gesture::GestureKind::CloseHand)
      .value("Swipe", gesture::GestureKind::Swipe);

  py::class_<gesture::GestureEvent>(m, "GestureEvent")
      .def(py::init<>())
      .def_readwrite("side", &gesture::GestureEvent::side)
      .def_readwrite("kind", &gesture::GestureEvent::kind)
      .def_readwrite("dx", &gesture::GestureEvent::dx)
      .def_readwrite("dy", &gesture::GestureEvent::dy)
      .def_readwrite("magnitude", &gesture::GestureEvent::magnitude)
      .def_readwrite("repeat", &gesture::GestureEvent::repeat)
      .def_property(
          "time_us", [](const gesture::GestureEvent& e) { return e.time.count(); },
          [](gesture::GestureEvent& e, std::int64_t us) { e.time = Micros{us}; });

  py::class_<gesture::HandTrackState>(m, "HandTrackState")
      .def(py::init<Side>(), py::arg("side") = Side::Left)
      .def_readonly("side", &gesture::HandTrackState::side)
      .def_property_readonly("aperture_state", [](const gesture::HandTrackState& s) {
        switch (s.aperture_state) {
          case gesture::ApertureState::Open: return "open";
          case gesture::ApertureState::Closed: return "closed";
          default: return "neutral";
        }
      });

  m.def("compute_aperture", &gesture::compute_aperture);
  m.def("compute_centroid", [](const proto::LandmarkFrame& f) {
    const auto c = gesture::compute_centroid(f);
    return std::make_tuple(c.x, c.y);
  });
  m.def(
      "classify",
      [](const gesture::HandTrackState& state, const proto::LandmarkFrame& frame, std::int64_t now_us,
         const gesture::GestureConfig& config) {
        try {
          auto result = gesture::classify(state, frame, Micros{now_us}, config);
          return std::make_pair(std::move(result.events), std::move(result.state));
        } catch (const gesture::ContractViolation& e) {
          throw py::value_error(e.what());
        }
      },
      py::arg("state"), py::arg("frame"), py::arg("now_us"), py::arg("config") = gesture::GestureConfig{},
      "Returns (events, new_state); the input state is not modified.");
  m.def("reset_hand", &gesture::reset_hand);

  // ---- wands --------------------------------------------------------------
  py::class_<wand::WandConfig>(m, "WandConfig")
      .def(py::init<>())
      .def_readwrite("key_step", &wand::WandConfig::key_step)
      .def_readwrite("depth_step", &wand::WandConfig::depth_step)
      .def_readwrite("gesture_gain", &wand::WandConfig::gesture_gain)
      .def_readwrite("r_min", &wand::WandConfig::r_min)
      .def_readwrite("r_max", &wand::WandConfig::r_max);

  py::class_<wand::WandState>(m, "WandState")
      .def(py::init<>())
      .def_readwrite("side", &wand::WandState::side)
      .def_readwrite("x", &wand::WandState::x)
      .def_readwrite("y", &wand::WandState::y)
      .def_readwrite("z", &wand::WandState::z)
      .def_readwrite("active", &wand::WandState::active)
      .def_readwrite("radius", &wand::WandState::radius)
      .def("__repr__", &repr_wand<wand::WandState>)
      .def(py::self == py::self);

  py::class_<wand::SceneState>(m, "SceneState")
      .def(py::init<>())
      .def_readwrite("left", &wand::SceneState::left)
      .def_readwrite("right", &wand::SceneState::right)
      .def_readwrite("overlap", &wand::SceneState::overlap)
      .def(py::self == py::self);

  py::class_<wand::WandAction>(m, "WandAction")
      .def_static("delta", &wand::WandAction::delta, py::arg("side"), py::arg("dx"), py::arg("dy"), py::arg("dz"))
      .def_static("toggle", &wand::WandAction::toggle, py::arg("side"))
      .def_readonly("side", &wand::WandAction::side)
      .def_property_readonly("is_toggle", [](const wand::WandAction& a) { return a.kind == wand::ActionKind::Toggle; })
      .def_readonly("dx", &wand::WandAction::dx)
      .def_readonly("dy", &wand::WandAction::dy)
      .def_readonly("dz", &wand::WandAction::dz)
      .def(py::self == py::self);

  m.def("initial_scene", &wand::initial_scene, py::arg("config") = wand::WandConfig{});
  m.def("apply_action", &wand::apply_action, py::arg("scene"), py::arg("action"), py::arg("config") = wand::WandConfig{});
  m.def("gesture_to_action", &wand::gesture_to_action, py::arg("event"), py::arg("config") = wand::WandConfig{});
  m.def("overlap_fraction", &wand::overlap_fraction);

  // ---- mapping ------------------------------------------------------------
  py::class_<mapping::MapConfig>(m, "MapConfig")
      .def(py::init<>())
      .def_readwrite("f_min", &mapping::MapConfig::f_min)
      .def_readwrite("f_max", &mapping::MapConfig::f_max)
      .def_readwrite("c_min", &mapping::MapConfig::c_min)
      .def_readwrite("c_max", &mapping::MapConfig::c_max)
      .def_readwrite("rt_min", &mapping::MapConfig::rt_min)
      .def_readwrite("rt_max", &mapping::MapConfig::rt_max)
      .def_readwrite("amp_floor", &mapping::MapConfig::amp_floor)
      .def_readwrite("xmod_exponent", &mapping::MapConfig::xmod_exponent);

  py::class_<mapping::VoiceParams>(m, "VoiceParams")
      .def(py::init<>())
      .def_readwrite("freq", &mapping::VoiceParams::freq)
      .def_readwrite("amp", &mapping::VoiceParams::amp)
      .def_readwrite("cutoff", &mapping::VoiceParams::cutoff)
      .def_readwrite("rt60", &mapping::VoiceParams::rt60)
      .def_readwrite("active", &mapping::VoiceParams::active);

  py::class_<mapping::SynthParams>(m, "SynthParams")
      .def(py::init<>())
      .def_property(
          "left", [](const mapping::SynthParams& p) { return p.voice(Side::Left); },
          [](mapping::SynthParams& p, const mapping::VoiceParams& v) { p.voice(Side::Left) = v; })
      .def_property(
          "right", [](const mapping::SynthParams& p) { return p.voice(Side::Right); },
          [](mapping::SynthParams& p, const mapping::VoiceParams& v) { p.voice(Side::Right) = v; })
      .def_readwrite("xmod", &mapping::SynthParams::xmod);

  const mapping::MapConfig default_map;
  m.def("map_pitch", &mapping::map_pitch, py::arg("y"), py::arg("config") = default_map);
  m.def("map_amp", &mapping::map_amp, py::arg("wand"), py::arg("config") = default_map);
  m.def("map_cutoff", &mapping::map_cutoff, py::arg("x"), py::arg("config") = default_map);
  m.def("map_reverb", &mapping::map_reverb, py::arg("z"), py::arg("config") = default_map);
  m.def("map_scene", &mapping::map_scene, py::arg("scene"), py::arg("config") = default_map);

  // ---- audio --------------------------------------------------------------
  py::class_<dsp::DspConfig>(m, "DspConfig")
      .def(py::init<>())
      .def_readwrite("sample_rate", &dsp::DspConfig::sample_rate)
      .def_readwrite("block_size", &dsp::DspConfig::block_size)
      .def_readwrite("xmod_depth", &dsp::DspConfig::xmod_depth)
      .def_readwrite("enable_xmod", &dsp::DspConfig::enable_xmod)
      .def_readwrite("naive_saw", &dsp::DspConfig::naive_saw)
      .def_readwrite("filter_q", &dsp::DspConfig::filter_q)
      .def_readwrite("smoothing_ms", &dsp::DspConfig::smoothing_ms)
      .def_readwrite("pan", &dsp::DspConfig::pan)
      .def_readwrite("reverb_mix", &dsp::DspConfig::reverb_mix)
      .def_readwrite("max_feedback", &dsp::DspConfig::max_feedback)
      .def_readwrite("fade_ms", &dsp::DspConfig::fade_ms);

  m.def(
      "render_offline",
      [](const std::vector<std::pair<double, mapping::SynthParams>>& timeline, double duration_s,
         const dsp::DspConfig& config) {
        std::vector<dsp::TimedParams> steps;
        steps.reserve(timeline.size());
        for (const auto& [t, p] : timeline) steps.push_back({t, p});
        dsp::OfflineRender render;
        {
          py::gil_scoped_release release;
          render = dsp::render_offline(steps, duration_s, config);
        }
        return stereo_array(render.samples);
      },
      py::arg("timeline"), py::arg("duration_s"), py::arg("config") = dsp::DspConfig{},
      "Renders [(time_s, SynthParams), ...] to a (frames, 2) float32 array.");

  m.def(
      "write_wav",
      [](const std::filesystem::path& path, py::array_t<float, py::array::c_style | py::array::forcecast> audio,
         std::uint32_t sample_rate) {
        if (audio.ndim() != 2) throw py::value_error("expected a (frames, channels) array");
        dsp::write_wav(path, std::span<const float>(audio.data(), static_cast<std::size_t>(audio.size())), sample_rate,
                       static_cast<std::uint16_t>(audio.shape(1)));
      },
      py::arg("path"), py::arg("audio"), py::arg("sample_rate") = 48000);
  m.def("read_wav", [](const std::filesystem::path& path) {
    const auto wav = dsp::read_wav(path);
    const auto frames = static_cast<py::ssize_t>(wav.samples.size() / wav.channels);
    py::array_t<float> out({frames, static_cast<py::ssize_t>(wav.channels)});
    std::copy(wav.samples.begin(), wav.samples.end(), out.mutable_data());
    return py::make_tuple(out, wav.sample_rate);
  });

  // ---- control ------------------------------------------------------------
  py::register_exception<control::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<control::ScriptError>(m, "ScriptError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dsp::IoError& e) {
      PyErr_SetString(PyExc_OSError, e.what());
    }
  });

  py::class_<control::EngineConfig>(m, "EngineConfig")
      .def(py::init<>())
      .def_readwrite("gesture", &control::EngineConfig::gesture)
      .def_readwrite("wand", &control::EngineConfig::wand)
      .def_readwrite("mapping", &control::EngineConfig::mapping)
      .def_readwrite("dsp", &control::EngineConfig::dsp)
      .def("validate", &control::EngineConfig::validate)
      .def("to_json", [](const control::EngineConfig& c) { return control::dump_config(c); });
  m.def("parse_config", &control::parse_config, py::arg("json_text"));
  m.def("load_config", &control::load_config, py::arg("path"));

  py::class_<control::Engine>(m, "Engine")
      .def(py::init<control::EngineConfig>(), py::arg("config") = control::EngineConfig{})
      .def("handle_key", &control::Engine::handle_key_code, py::arg("code"),
           "Applies a key by name ('W', 'Up', ...). Returns False for unknown codes.")
      .def(
          "handle_frame",
          [](control::Engine& e, const proto::LandmarkFrame& f, std::int64_t now_us) { e.handle_frame(f, Micros{now_us}); },
          py::arg("frame"), py::arg("now_us"))
      .def("handle_hand_lost", &control::Engine::handle_hand_lost)
      .def("handle_gesture", &control::Engine::handle_gesture)
      .def_property_readonly("scene", &control::Engine::scene)
      .def_property_readonly("params", &control::Engine::params)
      .def(
          "snapshot", [](control::Engine& e, std::int64_t now_us) { return snapshot_dict(e.snapshot(Micros{now_us})); },
          py::arg("now_us") = 0);

  m.def(
      "run_script",
      [](const std::string& script, double duration_s, const control::EngineConfig& config) {
        const auto events = control::parse_script(script);
        control::ScriptResult result;
        {
          py::gil_scoped_release release;
          result = control::run_script(config, events, duration_s);
        }
        return py::make_tuple(stereo_array(result.render.samples), snapshot_dict(result.final_state),
                              control::format_report(result.final_state));
      },
      py::arg("script"), py::arg("duration_s"), py::arg("config") = control::EngineConfig{},
      "Replays script text offline. Returns (audio, final_state, report).");
}
