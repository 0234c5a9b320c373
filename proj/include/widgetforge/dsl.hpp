#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "widgetforge/error.hpp"

namespace wf::dsl {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

enum class ComponentKind {
    Text,
    Icon,
    AppLogo,
    Image,
    MapImage,
    Button,
    Checkbox,
    Switch,
    Slider,
    Divider,
    Indicator,
    ProgressBar,
    ProgressRing,
    Sparkline,
    BarChart,
    StackedBarChart,
    LineChart,
    PieChart,
    RadarChart,
};

inline constexpr int kComponentKindCount = 19;

std::optional<ComponentKind> component_from_string(std::string_view name);
std::string_view to_string(ComponentKind kind);
const std::vector<ComponentKind>& all_component_kinds();

enum class Direction { Row, Col };

std::string_view to_string(Direction d);

struct Dimension {
    enum class Unit { Px, Percent };
    Unit unit { Unit::Px };
    double value { 0.0 };

    bool operator==(const Dimension&) const = default;
};

// flex accepts number | "none" at parse time; normalized to a weight >= 0.
struct FlexSpec {
    double weight { 0.0 };

    bool operator==(const FlexSpec&) const = default;
};

// Props keep whatever JSON the document carried; the per-kind schema drives
// validation and repair on top of this.
using PropMap = std::map<std::string, Json>;
// Raw values for structural fields that did not match their declared type.
// Kept so validate can report them and repair can coerce or drop them.
using LooseMap = std::map<std::string, Json>;

struct Node;

struct ContainerNode {
    std::optional<Direction> direction; // mandatory after repair
    double gap { 0.0 };
    FlexSpec flex {};
    std::optional<Dimension> width;
    std::optional<Dimension> height;
    double padding { 0.0 };
    std::optional<std::string> background_color;
    std::optional<double> border_radius;
    std::vector<Node> children;
    LooseMap loose;
};

struct LeafNode {
    ComponentKind component { ComponentKind::Text };
    FlexSpec flex {};
    std::optional<Dimension> width;
    std::optional<Dimension> height;
    PropMap props;
    std::optional<std::string> content; // Text carries its string here
    LooseMap loose;
};

struct Node {
    std::variant<ContainerNode, LeafNode> value;

    bool is_container() const { return std::holds_alternative<ContainerNode>(value); }
    bool is_leaf() const { return std::holds_alternative<LeafNode>(value); }
    ContainerNode& container() { return std::get<ContainerNode>(value); }
    const ContainerNode& container() const { return std::get<ContainerNode>(value); }
    LeafNode& leaf() { return std::get<LeafNode>(value); }
    const LeafNode& leaf() const { return std::get<LeafNode>(value); }
};

bool operator==(const Node& a, const Node& b);
inline bool operator!=(const Node& a, const Node& b) { return !(a == b); }
bool operator==(const ContainerNode& a, const ContainerNode& b);
bool operator==(const LeafNode& a, const LeafNode& b);

struct WidgetSpec {
    std::string background_color { "#ffffff" };
    double border_radius { 0.0 };
    double padding { 0.0 };
    double aspect_ratio { 1.0 };
    std::optional<Node> root; // a container in every valid spec
    LooseMap loose;
};

bool operator==(const WidgetSpec& a, const WidgetSpec& b);
inline bool operator!=(const WidgetSpec& a, const WidgetSpec& b) { return !(a == b); }

enum class Severity { Warning, Error };

struct Finding {
    std::string path;
    std::string code;
    std::string message;
    Severity severity { Severity::Error };
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool empty() const { return findings.empty(); }
    bool has_errors() const;
    Json to_json() const;
};

struct RepairEntry {
    std::string path;
    std::string rule;
    std::string detail;
};

struct RepairLog {
    std::vector<RepairEntry> entries;

    bool empty() const { return entries.empty(); }
    Json to_json() const;
};

struct RepairResult {
    WidgetSpec spec;
    RepairLog log;
};

// --- prop schema -----------------------------------------------------------

enum class PropType {
    Number,
    String,
    Color,
    Bool,
    NumberArray,
    Number2D,
    StringArray,
    ColorArray,
};

struct PropSpec {
    std::string name;
    PropType type { PropType::Number };
    bool required { false };
    Json default_value; // repair fills required props from here; emitters reuse it
    double min_value { -1.0e308 };
    double max_value { 1.0e308 };
    bool nonempty { false }; // arrays must have at least one element
};

struct KindSchema {
    ComponentKind kind { ComponentKind::Text };
    bool takes_content { false }; // node-level content field (Text only)
    std::vector<PropSpec> props;

    const PropSpec* find(std::string_view name) const;
};

const KindSchema& schema_for(ComponentKind kind);
bool is_hex_color(std::string_view s);
std::string lowercase_hex(std::string_view s);

bool json_is_number(const Json& j);
// Full-token numeric strings ("24", "-3.5"); nullopt otherwise.
std::optional<double> numeric_string_value(const Json& j);
// Integral doubles become JSON integers so canonical output prints 24, not 24.0.
Json canonical_number(double v);

// --- operations ------------------------------------------------------------

// JSON text -> typed tree. Throws Error{SyntaxError|SchemaError|UnknownComponent}.
WidgetSpec parse_widget_dsl(const std::string& text);
Node parse_node(const Json& j, const std::string& path);

ValidationReport validate(const WidgetSpec& spec);
ValidationReport validate_node(const Node& node, const std::string& path = "root");

// Fixed, ordered rule set; idempotent. Throws Error{Unrepairable} when the
// root is missing or not a container.
RepairResult repair(const WidgetSpec& spec);

// Canonical form: fixed key order, two-space indent, lowercase hex,
// default-valued fields omitted. parse(serialize(s)) == s.
std::string serialize(const WidgetSpec& spec);
OrderedJson node_to_json(const Node& node);

} // namespace wf::dsl
