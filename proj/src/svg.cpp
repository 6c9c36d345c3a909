#include "movable/svg.hpp"

#include <charconv>
#include <cstdint>
#include <cmath>
#include <numbers>

#include "movable/shapes.hpp"

namespace movable {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

/// Screen coordinates: y flipped.
std::string xy(Point p) { return num(p.x) + "," + num(-p.y); }

std::string points_attr(const std::vector<Point>& pts) {
    std::string out;
    for (const Point& p : pts) {
        if (!out.empty()) out += ' ';
        out += xy(p);
    }
    return out;
}

std::string polygon(const std::vector<Point>& pts, std::string_view extra = {}) {
    std::string out = "<polygon points=\"" + points_attr(pts) + "\"";
    if (!extra.empty()) {
        out += ' ';
        out += extra;
    }
    return out + "/>";
}

std::string circle(Point c, double r, std::string_view extra = {}) {
    std::string out = "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(-c.y) + "\" r=\"" + num(r) + "\"";
    if (!extra.empty()) {
        out += ' ';
        out += extra;
    }
    return out + "/>";
}

std::string line(Point a, Point b, std::string_view extra = {}) {
    std::string out = "<line x1=\"" + num(a.x) + "\" y1=\"" + num(-a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" +
                      num(-b.y) + "\"";
    if (!extra.empty()) {
        out += ' ';
        out += extra;
    }
    return out + "/>";
}

/// Full circle as two half arcs, for compound paths.
std::string circle_path(Point c, double r) {
    const Point a{c.x - r, c.y};
    const Point b{c.x + r, c.y};
    const std::string rr = num(r) + " " + num(r);
    return "M" + xy(a) + " A" + rr + " 0 1 0 " + xy(b) + " A" + rr + " 0 1 0 " + xy(a) + " Z";
}

std::string text_element(Point center, double font_size, double angle, std::string_view text) {
    const double deg = -angle * 180.0 / std::numbers::pi;
    return "<text x=\"" + num(center.x) + "\" y=\"" + num(-center.y) + "\" font-size=\"" + num(font_size) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\" transform=\"rotate(" + num(deg) + " " +
           num(center.x) + " " + num(-center.y) + ")\">" + escape(text) + "</text>";
}

std::string behavior_name(NodeBehavior b) {
    switch (b) {
        case NodeBehavior::WholeMove: return "whole-move";
        case NodeBehavior::NodeMove: return "node-move";
        case NodeBehavior::Frozen: return "frozen";
        case NodeBehavior::Transparent: return "transparent";
    }
    return "whole-move";
}

std::string cover_element(const CoverNode& node) {
    const std::string attrs = "class=\"cover\" data-behavior=\"" + behavior_name(node.behavior) + "\"";
    if (const auto* c = std::get_if<CircleShape>(&node.shape)) return circle(c->center, c->radius, attrs);
    if (const auto* p = std::get_if<PolygonShape>(&node.shape)) return polygon(p->vertices, attrs);
    const auto& s = std::get<StripShape>(node.shape);
    const auto u = normalized(s.b - s.a);
    if (!u) return circle(s.a, s.halfwidth, attrs);
    const Vector n = perpendicular(*u) * s.halfwidth;
    const std::string rr = num(s.halfwidth) + " " + num(s.halfwidth);
    return "<path d=\"M" + xy(s.a + n) + " L" + xy(s.b + n) + " A" + rr + " 0 0 0 " + xy(s.b - n) + " L" +
           xy(s.a - n) + " A" + rr + " 0 0 0 " + xy(s.a + n) + " Z\" " + attrs + "/>";
}

/// Shape elements of one object, without the wrapping group.
std::string object_body(const MovableObject& obj) {
    switch (obj.kind()) {
        case ObjectKind::SolitaryLine: {
            const auto& o = static_cast<const SolitaryLine&>(obj);
            return line(o.a(), o.b(), "class=\"stroke\"");
        }
        case ObjectKind::SegmentedLine: {
            const auto& o = static_cast<const SegmentedLine&>(obj);
            return "<polyline points=\"" + points_attr(o.points()) + "\" class=\"stroke\"/>";
        }
        case ObjectKind::Rect: {
            const auto& o = static_cast<const Rect&>(obj);
            const auto c = o.corners();
            std::string out = polygon({c.begin(), c.end()});
            for (std::size_t i = 0; i < o.partitions().size(); ++i) {
                const double x = o.partition_offset(i) - o.width() / 2.0;
                out += line(o.to_world({x, -o.height() / 2.0}), o.to_world({x, o.height() / 2.0}),
                            "class=\"partition\"");
            }
            return out;
        }
        case ObjectKind::Circle: {
            const auto& o = static_cast<const Circle&>(obj);
            return circle(o.center(), o.radius()) +
                   line(o.center(), o.center() + unit_at(o.angle()) * o.radius(), "class=\"mark\"");
        }
        case ObjectKind::Ring: {
            const auto& o = static_cast<const Ring&>(obj);
            std::string out = "<path fill-rule=\"evenodd\" d=\"" + circle_path(o.center(), o.r_outer()) + " " +
                              circle_path(o.center(), o.r_inner()) + "\"/>";
            for (double a : o.partitions()) {
                out += line(o.center() + unit_at(a) * o.r_inner(), o.center() + unit_at(a) * o.r_outer(),
                            "class=\"partition\"");
            }
            return out;
        }
        case ObjectKind::RegularPolygon:
            return polygon(static_cast<const RegularPolygon&>(obj).vertices());
        case ObjectKind::ConvexPolygon:
            return polygon(static_cast<const ConvexPolygon&>(obj).vertices());
        case ObjectKind::ChatoyantPolygon: {
            const auto& o = static_cast<const ChatoyantPolygon&>(obj);
            std::string out;
            for (const auto& t : o.triangles()) out += polygon({t.begin(), t.end()});
            return out + circle(o.center(), 1.5, "class=\"mark\"");
        }
        case ObjectKind::Sector: {
            const auto& o = static_cast<const Sector&>(obj);
            const Point a = o.center() + unit_at(o.start_angle()) * o.radius();
            const Point b = o.center() + unit_at(o.start_angle() + o.sweep()) * o.radius();
            const std::string large = o.sweep() > std::numbers::pi ? "1" : "0";
            return "<path d=\"M" + xy(o.center()) + " L" + xy(a) + " A" + num(o.radius()) + " " + num(o.radius()) +
                   " 0 " + large + " 0 " + xy(b) + " Z\"/>";
        }
        case ObjectKind::Crescent: {
            const auto& o = static_cast<const Crescent&>(obj);
            const std::string clip = "clip-" + escape(o.id());
            return "<clipPath id=\"" + clip + "\">" + circle(o.center(), o.radius()) +
                   "</clipPath><path fill-rule=\"evenodd\" clip-path=\"url(#" + clip + ")\" d=\"" +
                   circle_path(o.center(), o.radius()) + " " + circle_path(o.bite_center(), o.bite_radius()) +
                   "\"/>";
        }
        case ObjectKind::TextM:
        case ObjectKind::TextMR: {
            const auto& o = static_cast<const Text&>(obj);
            const auto c = o.corners();
            return polygon({c.begin(), c.end()}, "class=\"text-box\"") +
                   text_element(o.center(), o.font_size(), o.angle(), o.text());
        }
        case ObjectKind::SimpleHouse: {
            const auto& o = static_cast<const SimpleHouse&>(obj);
            const Box& b = o.body();
            return polygon({{b.min_x, b.min_y}, {b.max_x, b.min_y}, {b.max_x, b.max_y}, {b.min_x, b.max_y}}) +
                   polygon({{b.min_x, b.max_y}, {b.max_x, b.max_y}, o.apex()});
        }
        case ObjectKind::ElasticGroup: {
            const auto& o = static_cast<const ElasticGroup&>(obj);
            const Box& f = o.frame();
            return polygon({{f.min_x, f.min_y}, {f.max_x, f.min_y}, {f.max_x, f.max_y}, {f.min_x, f.max_y}},
                           "class=\"frame\"") +
                   text_element(o.title_anchor(), kTitleFontSize, 0.0, o.title());
        }
    }
    return {};
}

/// Stable fill for a color class (FNV-1a of the name).
std::string fill_of(const std::string& color_class) {
    std::uint32_t h = 2166136261u;
    for (unsigned char ch : color_class) {
        h ^= ch;
        h *= 16777619u;
    }
    return "hsl(" + std::to_string(h % 360) + ",60%,70%)";
}

}  // namespace

std::string render_svg(const Scene& scene, bool show_covers) {
    Box view = Box::empty();
    for (const auto& obj : scene.objects()) view = view.united(obj->bounds());
    if (scene.settings().area) view = view.united(scene.settings().area->bounds);
    if (view.is_empty()) view = {0.0, 0.0, 100.0, 100.0};
    view = view.inflated(20.0);

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(view.min_x) + " " +
                      num(-view.max_y) + " " + num(view.width()) + " " + num(view.height()) + "\">\n";
    out +=
        "<style>.object{fill:#e4e8f0;stroke:#223;stroke-width:1}.object .stroke{fill:none;stroke-width:2}"
        ".object text{fill:#111;stroke:none;font-family:monospace}.frame{fill:none;stroke-dasharray:4 3}"
        ".text-box{fill:none;stroke:none}.mark,.partition{fill:none}"
        ".cover{fill:none;stroke:#c22;stroke-width:0.5}.cover[data-behavior=frozen]{stroke:#888}"
        ".cover[data-behavior=transparent]{stroke:#2a2;stroke-dasharray:2 2}</style>\n";
    if (const auto& area = scene.settings().area) {
        const Box& b = area->bounds;
        out += "<rect class=\"area\" x=\"" + num(b.min_x) + "\" y=\"" + num(-b.max_y) + "\" width=\"" +
               num(b.width()) + "\" height=\"" + num(b.height()) + "\" fill=\"none\" stroke=\"#999\"/>\n";
    }
    for (const auto& obj : scene.objects()) {
        out += "<g class=\"object " + std::string(kind_name(obj->kind())) + "\" id=\"" + escape(obj->id()) + "\"";
        if (obj->color_class()) {
            out += " data-color=\"" + escape(*obj->color_class()) + "\" style=\"fill:" + fill_of(*obj->color_class()) +
                   "\"";
        }
        out += ">" + object_body(*obj) + "</g>\n";
        if (show_covers) {
            for (const auto& node : obj->build_cover().nodes) out += cover_element(node) + "\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace movable
