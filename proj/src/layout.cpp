#include "movable/layout.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <set>

#include "movable/error.hpp"
#include "movable/groups.hpp"
#include "movable/shapes.hpp"

namespace movable {

namespace {

// Names ----------------------------------------------------------------------

std::string_view bool_name(bool b) { return b ? "true" : "false"; }

std::string_view rect_mode_name(RectPolicy::Mode m) {
    switch (m) {
        case RectPolicy::Mode::Free: return "free";
        case RectPolicy::Mode::FixedRatio: return "fixed_ratio";
        case RectPolicy::Mode::Symmetric: return "symmetric";
        case RectPolicy::Mode::SingleBorder: return "single_border";
    }
    return "free";
}

std::string_view side_name(RectSide s) {
    switch (s) {
        case RectSide::Left: return "left";
        case RectSide::Right: return "right";
        case RectSide::Bottom: return "bottom";
        case RectSide::Top: return "top";
    }
    return "right";
}

std::string_view sector_policy_name(SectorPolicy p) {
    switch (p) {
        case SectorPolicy::Fixed: return "fixed";
        case SectorPolicy::ArcOnly: return "arc_only";
        case SectorPolicy::OneSide: return "one_side";
        case SectorPolicy::Full: return "full";
    }
    return "full";
}

std::string_view region_name(CommentRegion::Kind k) {
    switch (k) {
        case CommentRegion::Kind::Free: return "free";
        case CommentRegion::Kind::Box: return "box";
        case CommentRegion::Kind::Radius: return "radius";
    }
    return "free";
}

std::string_view overlap_name(OverlapRule::Mode m) {
    switch (m) {
        case OverlapRule::Mode::Off: return "off";
        case OverlapRule::Mode::SameColorForbidden: return "same_color";
        case OverlapRule::Mode::AllForbidden: return "all";
    }
    return "off";
}

std::string_view area_mode_name(AreaRestriction::Mode m) {
    return m == AreaRestriction::Mode::GrabPointInside ? "grab_point_inside" : "whole_object_inside";
}

template <typename Enum, std::size_t N>
std::optional<Enum> parse_name(std::string_view word, const std::array<Enum, N>& values,
                               std::string_view (*name)(Enum)) {
    for (Enum v : values) {
        if (name(v) == word) return v;
    }
    return std::nullopt;
}

// Writing --------------------------------------------------------------------

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
            out += ch;
        } else if (ch == '\n') {
            out += "\\n";
        } else {
            out += ch;
        }
    }
    out += '"';
    return out;
}

class Writer {
public:
    void raw(std::string_view text) {
        out_ += text;
        out_ += '\n';
    }

    /// Indented "key value..." line.
    template <typename... Parts>
    void field(std::string_view key, const Parts&... parts) {
        out_ += "  ";
        out_ += key;
        ((out_ += ' ', out_ += to_text(parts)), ...);
        out_ += '\n';
    }

    void reals(std::string_view key, const std::vector<double>& values) {
        out_ += "  ";
        out_ += key;
        out_ += ' ';
        out_ += std::to_string(values.size());
        for (double v : values) {
            out_ += ' ';
            out_ += format_real(v);
        }
        out_ += '\n';
    }

    void points(std::string_view key, const std::vector<Point>& pts) {
        std::vector<double> flat;
        for (const Point& p : pts) {
            flat.push_back(p.x);
            flat.push_back(p.y);
        }
        out_ += "  ";
        out_ += key;
        out_ += ' ';
        out_ += std::to_string(pts.size());
        for (double v : flat) {
            out_ += ' ';
            out_ += format_real(v);
        }
        out_ += '\n';
    }

    void strings(std::string_view key, const std::vector<std::string>& values) {
        out_ += "  ";
        out_ += key;
        out_ += ' ';
        out_ += std::to_string(values.size());
        for (const auto& v : values) {
            out_ += ' ';
            out_ += quote(v);
        }
        out_ += '\n';
    }

    std::string take() { return std::move(out_); }

private:
    static std::string to_text(double v) { return format_real(v); }
    static std::string to_text(std::string_view s) { return std::string(s); }
    static std::string to_text(const std::string& s) { return s; }
    static std::string to_text(const char* s) { return s; }
    static std::string to_text(std::size_t n) { return std::to_string(n); }
    static std::string to_text(Point p) { return format_real(p.x) + " " + format_real(p.y); }

    std::string out_;
};

void write_common(Writer& w, const MovableObject& obj) {
    w.field("movable", bool_name(obj.movable()));
    w.field("rotatable", bool_name(obj.rotatable()));
    if (obj.color_class()) {
        w.field("color", quote(*obj.color_class()));
    } else {
        w.field("color", "none");
    }
    if (const auto& l = obj.limits()) {
        w.field("limits", l->min_size, l->max_size, l->min_radius, l->max_radius);
    } else {
        w.field("limits", "none");
    }
}

void write_object(Writer& w, const MovableObject& obj) {
    w.raw("object " + std::string(kind_name(obj.kind())) + " " + quote(obj.id()) + " {");
    write_common(w, obj);
    switch (obj.kind()) {
        case ObjectKind::SolitaryLine: {
            const auto& o = static_cast<const SolitaryLine&>(obj);
            w.field("a", o.a());
            w.field("b", o.b());
            break;
        }
        case ObjectKind::SegmentedLine:
            w.points("points", static_cast<const SegmentedLine&>(obj).points());
            break;
        case ObjectKind::Rect: {
            const auto& o = static_cast<const Rect&>(obj);
            const RectPolicy& p = o.policy();
            w.field("center", o.center());
            w.field("size", o.width(), o.height());
            w.field("angle", o.angle());
            w.field("mode", rect_mode_name(p.mode));
            w.field("ratio", p.ratio);
            w.field("side", side_name(p.side));
            w.field("vanish", p.vanish == RectPolicy::Vanish::Vanish ? "vanish" : "clamp");
            w.field("min_size", p.min_size);
            w.reals("partitions", o.partitions());
            break;
        }
        case ObjectKind::Circle: {
            const auto& o = static_cast<const Circle&>(obj);
            w.field("center", o.center());
            w.field("radius", o.radius());
            w.field("angle", o.angle());
            break;
        }
        case ObjectKind::Ring: {
            const auto& o = static_cast<const Ring&>(obj);
            w.field("center", o.center());
            w.field("radii", o.r_inner(), o.r_outer());
            w.reals("partitions", o.partitions());
            break;
        }
        case ObjectKind::RegularPolygon: {
            const auto& o = static_cast<const RegularPolygon&>(obj);
            w.field("center", o.center());
            w.field("radius", o.radius());
            w.field("sides", o.sides());
            w.field("angle", o.angle());
            break;
        }
        case ObjectKind::ConvexPolygon:
            w.points("vertices", static_cast<const ConvexPolygon&>(obj).vertices());
            break;
        case ObjectKind::ChatoyantPolygon: {
            const auto& o = static_cast<const ChatoyantPolygon&>(obj);
            w.field("center", o.center());
            w.points("vertices", o.vertices());
            break;
        }
        case ObjectKind::Sector: {
            const auto& o = static_cast<const Sector&>(obj);
            w.field("center", o.center());
            w.field("radius", o.radius());
            w.field("start", o.start_angle());
            w.field("sweep", o.sweep());
            w.field("policy", sector_policy_name(o.policy()));
            break;
        }
        case ObjectKind::Crescent: {
            const auto& o = static_cast<const Crescent&>(obj);
            w.field("center", o.center());
            w.field("radius", o.radius());
            w.field("bite_offset", o.bite_offset());
            w.field("bite_radius", o.bite_radius());
            break;
        }
        case ObjectKind::TextM:
        case ObjectKind::TextMR: {
            const auto& o = static_cast<const Text&>(obj);
            w.field("text", quote(o.text()));
            w.field("center", o.center());
            w.field("font_size", o.font_size());
            w.field("angle", o.angle());
            break;
        }
        case ObjectKind::SimpleHouse: {
            const auto& o = static_cast<const SimpleHouse&>(obj);
            const Box& b = o.body();
            w.field("body", Point{b.min_x, b.min_y}, Point{b.max_x, b.max_y});
            w.field("apex", o.apex());
            break;
        }
        case ObjectKind::ElasticGroup: {
            const auto& o = static_cast<const ElasticGroup&>(obj);
            const Margins& m = o.margins();
            w.strings("members", o.members());
            w.field("margins", m.left, m.bottom, m.right, m.top);
            w.field("title", quote(o.title()));
            w.field("title_offset", o.title_offset());
            break;
        }
    }
    w.raw("}");
}

// Reading --------------------------------------------------------------------

struct Token {
    std::string text;
    bool quoted = false;
};

struct Line {
    std::size_t number = 0;
    std::vector<Token> tokens;
};

[[noreturn]] void fail_at(std::size_t line, const std::string& message) {
    throw Error(ErrorCode::MalformedDocument, "line " + std::to_string(line) + ": " + message);
}

std::vector<Token> tokenize(std::string_view text, std::size_t number) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
            ++i;
            continue;
        }
        Token tok;
        if (text[i] == '"') {
            tok.quoted = true;
            ++i;
            bool closed = false;
            while (i < text.size()) {
                const char ch = text[i++];
                if (ch == '"') {
                    closed = true;
                    break;
                }
                if (ch == '\\') {
                    if (i >= text.size()) break;
                    const char esc = text[i++];
                    if (esc == 'n') tok.text += '\n';
                    else if (esc == '"' || esc == '\\') tok.text += esc;
                    else fail_at(number, std::string("unknown escape \\") + esc);
                } else {
                    tok.text += ch;
                }
            }
            if (!closed) fail_at(number, "unterminated string");
            if (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') {
                fail_at(number, "garbage after string");
            }
        } else {
            while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') {
                if (text[i] == '"') fail_at(number, "quote inside a word");
                tok.text += text[i++];
            }
        }
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

class Parser {
public:
    explicit Parser(std::string_view doc) {
        std::size_t number = 0;
        std::size_t start = 0;
        while (start <= doc.size()) {
            const std::size_t end = doc.find('\n', start);
            const std::string_view text = doc.substr(start, end == std::string_view::npos ? doc.size() - start : end - start);
            ++number;
            auto tokens = tokenize(text, number);
            if (!tokens.empty()) lines_.push_back({number, std::move(tokens)});
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
        last_line_ = number;
    }

    bool done() const { return pos_ >= lines_.size(); }

    const Line& peek() {
        if (done()) fail_at(last_line_, "unexpected end of document");
        return lines_[pos_];
    }

    const Line& next() {
        const Line& line = peek();
        ++pos_;
        return line;
    }

    /// Next line must be "key" followed by exactly @p args tokens.
    const Line& expect(std::string_view key, std::size_t args) {
        const Line& line = expect_key(key);
        if (line.tokens.size() != args + 1) {
            fail_at(line.number, "'" + std::string(key) + "' takes " + std::to_string(args) + " value(s)");
        }
        return line;
    }

    const Line& expect_key(std::string_view key) {
        const Line& line = next();
        const Token& first = line.tokens.front();
        if (first.quoted || first.text != key) {
            fail_at(line.number, "expected '" + std::string(key) + "', found '" + first.text + "'");
        }
        return line;
    }

    static const Token& at(const Line& line, std::size_t i) {
        if (i >= line.tokens.size()) fail_at(line.number, "missing value");
        return line.tokens[i];
    }

    static std::string word(const Line& line, std::size_t i) {
        const Token& t = at(line, i);
        if (t.quoted) fail_at(line.number, "expected a word, found a string");
        return t.text;
    }

    static std::string str(const Line& line, std::size_t i) {
        const Token& t = at(line, i);
        if (!t.quoted) fail_at(line.number, "expected a quoted string, found '" + t.text + "'");
        return t.text;
    }

    static double real(const Line& line, std::size_t i) {
        const Token& t = at(line, i);
        if (t.quoted) fail_at(line.number, "expected a number, found a string");
        double v = 0.0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) fail_at(line.number, "bad number '" + t.text + "'");
        if (!std::isfinite(v)) fail_at(line.number, "non-finite number '" + t.text + "'");
        return v;
    }

    static Point point(const Line& line, std::size_t i) { return {real(line, i), real(line, i + 1)}; }

    static std::size_t count(const Line& line, std::size_t i) {
        const std::string w = word(line, i);
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), n);
        if (ec != std::errc() || ptr != w.data() + w.size() || n > 1000000) {
            fail_at(line.number, "bad count '" + w + "'");
        }
        return n;
    }

    static bool boolean(const Line& line, std::size_t i) {
        const std::string w = word(line, i);
        if (w == "true") return true;
        if (w == "false") return false;
        fail_at(line.number, "expected true or false, found '" + w + "'");
    }

    /// "key N v1 .. vN" with @p per values per item.
    const Line& counted(std::string_view key, std::size_t per, std::size_t& n) {
        const Line& line = expect_key(key);
        n = count(line, 1);
        if (line.tokens.size() != 2 + n * per) {
            fail_at(line.number, "'" + std::string(key) + "' declares " + std::to_string(n) + " item(s)");
        }
        return line;
    }

    std::vector<double> reals(std::string_view key) {
        std::size_t n = 0;
        const Line& line = counted(key, 1, n);
        std::vector<double> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(real(line, 2 + i));
        return out;
    }

    std::vector<Point> points(std::string_view key) {
        std::size_t n = 0;
        const Line& line = counted(key, 2, n);
        std::vector<Point> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(point(line, 2 + 2 * i));
        return out;
    }

    std::vector<std::string> strings(std::string_view key) {
        std::size_t n = 0;
        const Line& line = counted(key, 1, n);
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(str(line, 2 + i));
        return out;
    }

    double real_field(std::string_view key) { return real(expect(key, 1), 1); }
    Point point_field(std::string_view key) { return point(expect(key, 2), 1); }
    std::string word_field(std::string_view key) { return word(expect(key, 1), 1); }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
    std::size_t last_line_ = 0;
};

struct Common {
    bool movable = true;
    bool rotatable = true;
    std::size_t rotatable_line = 0;
    std::optional<std::string> color;
    std::optional<SizeLimits> limits;
};

Common read_common(Parser& p) {
    Common c;
    c.movable = Parser::boolean(p.expect("movable", 1), 1);
    const Line& rot = p.expect("rotatable", 1);
    c.rotatable = Parser::boolean(rot, 1);
    c.rotatable_line = rot.number;
    const Line& color = p.expect("color", 1);
    if (!color.tokens[1].quoted && color.tokens[1].text == "none") {
        c.color = std::nullopt;
    } else {
        c.color = Parser::str(color, 1);
    }
    const Line& limits = p.expect_key("limits");
    if (limits.tokens.size() == 2 && Parser::word(limits, 1) == "none") {
        c.limits = std::nullopt;
    } else {
        if (limits.tokens.size() != 7) fail_at(limits.number, "'limits' takes none or 6 values");
        SizeLimits l;
        l.min_size = Parser::point(limits, 1);
        l.max_size = Parser::point(limits, 3);
        l.min_radius = Parser::real(limits, 5);
        l.max_radius = Parser::real(limits, 6);
        if (!limits_valid(l)) fail_at(limits.number, "limits need 0 < min <= max");
        c.limits = l;
    }
    return c;
}

std::unique_ptr<MovableObject> read_body(Parser& p, ObjectKind kind, const std::string& id, std::size_t line) {
    switch (kind) {
        case ObjectKind::SolitaryLine: {
            const Point a = p.point_field("a");
            const Point b = p.point_field("b");
            return std::make_unique<SolitaryLine>(id, a, b);
        }
        case ObjectKind::SegmentedLine: {
            auto pts = p.points("points");
            if (pts.size() < 2) fail_at(line, "segmented line needs two points");
            return std::make_unique<SegmentedLine>(id, std::move(pts));
        }
        case ObjectKind::Rect: {
            const Point center = p.point_field("center");
            const Line& size = p.expect("size", 2);
            const double angle = p.real_field("angle");
            RectPolicy policy;
            const Line& mode = p.expect("mode", 1);
            const auto m = parse_name<RectPolicy::Mode, 4>(
                Parser::word(mode, 1),
                {RectPolicy::Mode::Free, RectPolicy::Mode::FixedRatio, RectPolicy::Mode::Symmetric,
                 RectPolicy::Mode::SingleBorder},
                rect_mode_name);
            if (!m) fail_at(mode.number, "unknown rectangle mode");
            policy.mode = *m;
            policy.ratio = p.real_field("ratio");
            const Line& side = p.expect("side", 1);
            const auto s = parse_name<RectSide, 4>(
                Parser::word(side, 1), {RectSide::Left, RectSide::Right, RectSide::Bottom, RectSide::Top}, side_name);
            if (!s) fail_at(side.number, "unknown side");
            policy.side = *s;
            const Line& vanish = p.expect("vanish", 1);
            const std::string v = Parser::word(vanish, 1);
            if (v != "clamp" && v != "vanish") fail_at(vanish.number, "vanish must be clamp or vanish");
            policy.vanish = v == "vanish" ? RectPolicy::Vanish::Vanish : RectPolicy::Vanish::Clamp;
            policy.min_size = p.point_field("min_size");
            auto rect = std::make_unique<Rect>(id, center, Parser::real(size, 1), Parser::real(size, 2), policy);
            rect->set_angle(angle);
            rect->set_partition_fractions(p.reals("partitions"));
            return rect;
        }
        case ObjectKind::Circle: {
            const Point center = p.point_field("center");
            const double radius = p.real_field("radius");
            auto circle = std::make_unique<Circle>(id, center, radius);
            circle->set_angle(p.real_field("angle"));
            return circle;
        }
        case ObjectKind::Ring: {
            const Point center = p.point_field("center");
            const Line& radii = p.expect("radii", 2);
            auto partitions = p.reals("partitions");
            return std::make_unique<Ring>(id, center, Parser::real(radii, 1), Parser::real(radii, 2),
                                          std::move(partitions));
        }
        case ObjectKind::RegularPolygon: {
            const Point center = p.point_field("center");
            const double radius = p.real_field("radius");
            const Line& sides = p.expect("sides", 1);
            const std::size_t n = Parser::count(sides, 1);
            if (n < 3) fail_at(sides.number, "regular polygon needs three sides");
            const double angle = p.real_field("angle");
            return std::make_unique<RegularPolygon>(id, center, radius, n, angle);
        }
        case ObjectKind::ConvexPolygon: {
            auto vertices = p.points("vertices");
            if (vertices.size() < 3) fail_at(line, "convex polygon needs three vertices");
            return std::make_unique<ConvexPolygon>(id, std::move(vertices));
        }
        case ObjectKind::ChatoyantPolygon: {
            const Point center = p.point_field("center");
            auto vertices = p.points("vertices");
            if (vertices.size() < 3) fail_at(line, "chatoyant polygon needs three vertices");
            return std::make_unique<ChatoyantPolygon>(id, center, std::move(vertices));
        }
        case ObjectKind::Sector: {
            const Point center = p.point_field("center");
            const double radius = p.real_field("radius");
            const double start = p.real_field("start");
            const double sweep = p.real_field("sweep");
            const Line& pol = p.expect("policy", 1);
            const auto policy = parse_name<SectorPolicy, 4>(
                Parser::word(pol, 1),
                {SectorPolicy::Fixed, SectorPolicy::ArcOnly, SectorPolicy::OneSide, SectorPolicy::Full},
                sector_policy_name);
            if (!policy) fail_at(pol.number, "unknown sector policy");
            return std::make_unique<Sector>(id, center, radius, start, sweep, *policy);
        }
        case ObjectKind::Crescent: {
            const Point center = p.point_field("center");
            const double radius = p.real_field("radius");
            const Point offset = p.point_field("bite_offset");
            const double bite = p.real_field("bite_radius");
            return std::make_unique<Crescent>(id, center, radius, offset, bite);
        }
        case ObjectKind::TextM:
        case ObjectKind::TextMR: {
            const std::string text = Parser::str(p.expect("text", 1), 1);
            const Point center = p.point_field("center");
            const double font = p.real_field("font_size");
            auto t = std::make_unique<Text>(id, text, center, font, kind == ObjectKind::TextMR);
            t->set_angle(p.real_field("angle"));
            return t;
        }
        case ObjectKind::SimpleHouse: {
            const Line& body = p.expect("body", 4);
            const Point lo = Parser::point(body, 1);
            const Point hi = Parser::point(body, 3);
            const Point apex = p.point_field("apex");
            return std::make_unique<SimpleHouse>(id, Box{lo.x, lo.y, hi.x, hi.y}, apex);
        }
        case ObjectKind::ElasticGroup: {
            auto members = p.strings("members");
            const Line& margins = p.expect("margins", 4);
            const Margins m{Parser::real(margins, 1), Parser::real(margins, 2), Parser::real(margins, 3),
                            Parser::real(margins, 4)};
            const std::string title = Parser::str(p.expect("title", 1), 1);
            const double offset = p.real_field("title_offset");
            return std::make_unique<ElasticGroup>(id, std::move(members), m, title, offset);
        }
    }
    fail_at(line, "unsupported kind");
}

bool fixed_rotatability(ObjectKind kind) {
    return kind == ObjectKind::TextM || kind == ObjectKind::TextMR || kind == ObjectKind::SimpleHouse ||
           kind == ObjectKind::ElasticGroup;
}

void read_settings(Parser& p, SceneSettings& s) {
    const Line& open = p.expect("settings", 1);
    if (Parser::word(open, 1) != "{") fail_at(open.number, "expected '{' after settings");
    s.raise_on_catch = Parser::boolean(p.expect("raise_on_catch", 1), 1);
    s.safe = Parser::boolean(p.expect("safe", 1), 1);
    const Line& area = p.expect_key("area");
    if (area.tokens.size() == 2 && Parser::word(area, 1) == "none") {
        s.area = std::nullopt;
    } else {
        if (area.tokens.size() != 6) fail_at(area.number, "'area' takes none or 5 values");
        const Point lo = Parser::point(area, 1);
        const Point hi = Parser::point(area, 3);
        const auto mode = parse_name<AreaRestriction::Mode, 2>(
            Parser::word(area, 5),
            {AreaRestriction::Mode::GrabPointInside, AreaRestriction::Mode::WholeObjectInside}, area_mode_name);
        if (!mode) fail_at(area.number, "unknown area mode");
        if (!(hi.x > lo.x) || !(hi.y > lo.y)) fail_at(area.number, "area bounds are degenerate");
        s.area = AreaRestriction{Box{lo.x, lo.y, hi.x, hi.y}, *mode};
    }
    const Line& overlap = p.expect("overlap", 1);
    const auto mode = parse_name<OverlapRule::Mode, 3>(
        Parser::word(overlap, 1),
        {OverlapRule::Mode::Off, OverlapRule::Mode::SameColorForbidden, OverlapRule::Mode::AllForbidden},
        overlap_name);
    if (!mode) fail_at(overlap.number, "unknown overlap mode");
    s.overlap.mode = *mode;
    s.overlap.obstacles = p.strings("obstacles");
    const Line& close = p.expect("}", 0);
    (void)close;
}

}  // namespace

std::string format_real(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

std::string serialize(const Scene& scene) {
    Writer w;
    w.raw(kLayoutHeader);
    const SceneSettings& s = scene.settings();
    w.raw("settings {");
    w.field("raise_on_catch", bool_name(s.raise_on_catch));
    w.field("safe", bool_name(s.safe));
    if (s.area) {
        const Box& b = s.area->bounds;
        w.field("area", Point{b.min_x, b.min_y}, Point{b.max_x, b.max_y}, area_mode_name(s.area->mode));
    } else {
        w.field("area", "none");
    }
    w.field("overlap", overlap_name(s.overlap.mode));
    w.strings("obstacles", s.overlap.obstacles);
    w.raw("}");
    for (const auto& obj : scene.objects()) write_object(w, *obj);
    for (const auto& c : scene.comments()) {
        w.raw("comment " + quote(c.body) + " " + quote(c.comment) + " " + std::string(region_name(c.region.kind)) +
              " " + format_real(c.region.extent));
    }
    w.raw("end");
    return w.take();
}

Scene deserialize(std::string_view document) {
    Parser p(document);
    if (p.done()) fail_at(1, "empty document");
    {
        const Line& header = p.next();
        if (header.tokens.size() != 2 || header.tokens[0].text != "movable-layout") {
            fail_at(header.number, "missing 'movable-layout' header");
        }
        if (header.tokens[1].text != "1") fail_at(header.number, "unsupported version '" + header.tokens[1].text + "'");
    }
    Scene scene;
    read_settings(p, scene.settings());

    while (true) {
        const Line& line = p.next();
        const std::string key = Parser::word(line, 0);
        if (key == "end") {
            if (line.tokens.size() != 1) fail_at(line.number, "'end' takes no values");
            if (!p.done()) fail_at(p.peek().number, "content after 'end'");
            break;
        }
        if (key == "object") {
            if (line.tokens.size() != 4 || Parser::word(line, 3) != "{") {
                fail_at(line.number, "expected: object <kind> \"<id>\" {");
            }
            const std::string kind_word = Parser::word(line, 1);
            const auto kind = kind_from_name(kind_word);
            if (!kind) fail_at(line.number, "unknown kind '" + kind_word + "'");
            const std::string id = Parser::str(line, 2);
            if (id.empty()) fail_at(line.number, "empty id");
            if (scene.contains(id)) fail_at(line.number, "duplicate id '" + id + "'");
            const Common common = read_common(p);
            std::unique_ptr<MovableObject> obj;
            try {
                obj = read_body(p, *kind, id, line.number);
            } catch (const Error& e) {
                if (e.code() == ErrorCode::MalformedDocument) throw;
                fail_at(line.number, e.what());
            }
            p.expect("}", 0);
            obj->set_movable(common.movable);
            if (fixed_rotatability(*kind)) {
                if (common.rotatable != obj->rotatable()) {
                    fail_at(common.rotatable_line, "rotatable must be " + std::string(bool_name(obj->rotatable())) +
                                                       " for " + kind_word);
                }
            } else {
                obj->set_rotatable(common.rotatable);
            }
            obj->set_color_class(common.color);
            obj->set_limits(common.limits);
            scene.add_object(std::move(obj));
            continue;
        }
        if (key == "comment") {
            if (line.tokens.size() != 5) fail_at(line.number, "expected: comment \"<body>\" \"<comment>\" <region> <extent>");
            CommentedElement pair;
            pair.body = Parser::str(line, 1);
            pair.comment = Parser::str(line, 2);
            const auto region = parse_name<CommentRegion::Kind, 3>(
                Parser::word(line, 3),
                {CommentRegion::Kind::Free, CommentRegion::Kind::Box, CommentRegion::Kind::Radius}, region_name);
            if (!region) fail_at(line.number, "unknown comment region");
            pair.region = {*region, Parser::real(line, 4)};
            if (!scene.contains(pair.body) || !scene.contains(pair.comment)) {
                fail_at(line.number, "comment refers to an unknown object");
            }
            scene.add_comment(std::move(pair));
            continue;
        }
        fail_at(line.number, "unexpected '" + key + "'");
    }
    scene.refresh_groups();
    return scene;
}

}  // namespace movable
