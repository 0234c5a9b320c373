#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "widgetforge/dsl.hpp"

namespace wf::codegen {

enum class EmitTarget { Html, React };

struct EmitOptions {
    EmitTarget target = EmitTarget::Html;
    double layout_w = 360.0; // viewport width the layout is solved at
    double layout_h = 0.0;   // 0: derived from the shell aspect ratio
    double frame_w = 0.0;    // rendered frame width; 0: same as the layout width
    double frame_h = 0.0;    // rendered frame height; 0: same as the layout height
    std::string icon_dir;    // directory searched for <Name>.svg files
};

// One entry per addressable node, shared verbatim between output targets.
struct StructuralRecord {
    std::string id;
    std::string kind;
    std::uint64_t style_hash = 0;
};

struct EmitResult {
    std::string source;
    std::vector<StructuralRecord> manifest;
    std::vector<std::string> warnings;
};

dsl::Json manifest_to_json(const std::vector<StructuralRecord>& manifest);

EmitResult emit(const dsl::WidgetSpec& spec, const EmitOptions& opts = {});

} // namespace wf::codegen
