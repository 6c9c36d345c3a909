#include "movable/trace.hpp"

#include <charconv>
#include <cmath>

#include "movable/error.hpp"
#include "movable/layout.hpp"

namespace movable {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw Error(ErrorCode::MalformedTrace, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split(std::string_view text) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') ++i;
        if (i > start) words.push_back(text.substr(start, i - start));
    }
    return words;
}

double parse_real(std::string_view word, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc() || ptr != word.data() + word.size() || !std::isfinite(v)) {
        fail(line, "bad coordinate '" + std::string(word) + "'");
    }
    return v;
}

std::string_view kind_word(TraceKind kind) {
    switch (kind) {
        case TraceKind::Press: return "press";
        case TraceKind::Move: return "move";
        case TraceKind::Release: return "release";
    }
    return "move";
}

void check_events(const std::vector<TraceEvent>& events, const std::vector<std::size_t>* lines) {
    bool pressed = false;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const TraceEvent& e = events[i];
        const std::size_t line = lines ? (*lines)[i] : i + 1;
        if (i > 0 && e.seq <= events[i - 1].seq) fail(line, "seq must strictly increase");
        if (!is_finite(e.pos)) fail(line, "non-finite position");
        switch (e.kind) {
            case TraceKind::Press:
                if (!e.button) fail(line, "press needs a button");
                if (pressed) fail(line, "press while the button is down");
                pressed = true;
                break;
            case TraceKind::Release:
                if (e.button) fail(line, "release takes no button");
                if (!pressed) fail(line, "release without a press");
                pressed = false;
                break;
            case TraceKind::Move:
                if (e.button) fail(line, "move takes no button");
                break;
        }
    }
}

}  // namespace

std::vector<TraceEvent> parse_trace(std::string_view text) {
    std::vector<TraceEvent> events;
    std::vector<std::size_t> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++number;
        const auto words = split(raw);
        if (words.empty() || words.front().front() == '#') continue;
        if (words.size() != 5) fail(number, "expected: seq kind button x y");

        TraceEvent e;
        const auto [ptr, ec] = std::from_chars(words[0].data(), words[0].data() + words[0].size(), e.seq);
        if (ec != std::errc() || ptr != words[0].data() + words[0].size()) {
            fail(number, "bad seq '" + std::string(words[0]) + "'");
        }
        if (words[1] == "press") e.kind = TraceKind::Press;
        else if (words[1] == "move") e.kind = TraceKind::Move;
        else if (words[1] == "release") e.kind = TraceKind::Release;
        else fail(number, "unknown kind '" + std::string(words[1]) + "'");

        if (words[2] == "primary") e.button = PointerButton::Primary;
        else if (words[2] == "secondary") e.button = PointerButton::Secondary;
        else if (words[2] != "-") fail(number, "unknown button '" + std::string(words[2]) + "'");

        e.pos = {parse_real(words[3], number), parse_real(words[4], number)};
        events.push_back(e);
        lines.push_back(number);
    }
    check_events(events, &lines);
    return events;
}

std::string format_trace(const std::vector<TraceEvent>& events) {
    std::string out;
    for (const auto& e : events) {
        out += std::to_string(e.seq);
        out += ' ';
        out += kind_word(e.kind);
        out += ' ';
        out += !e.button ? "-" : *e.button == PointerButton::Primary ? "primary" : "secondary";
        out += ' ';
        out += format_real(e.pos.x);
        out += ' ';
        out += format_real(e.pos.y);
        out += '\n';
    }
    return out;
}

void check_trace(const std::vector<TraceEvent>& events) { check_events(events, nullptr); }

ReplayReport replay(Scene scene, const std::vector<TraceEvent>& events) {
    check_trace(events);
    ReplayReport report;
    report.outcomes.reserve(events.size());
    for (const auto& e : events) {
        EventOutcome outcome;
        switch (e.kind) {
            case TraceKind::Press:
                outcome.caught = scene.press(e.pos, *e.button);
                break;
            case TraceKind::Move:
                outcome.report = scene.move(e.pos);
                break;
            case TraceKind::Release:
                outcome.released = scene.release(e.pos);
                break;
        }
        report.outcomes.push_back(std::move(outcome));
    }
    report.final_scene = std::move(scene);
    return report;
}

}  // namespace movable
