#include "exthink/template_engine.hpp"

#include "exthink/errors.hpp"

namespace exthink {

Template Template::parse(std::string body) {
    Template t;
    t.body_ = std::move(body);

    // Stack of open sections; top-level nodes live in frames[0].
    std::vector<std::pair<std::string, std::vector<Template::Node>>> frames;
    frames.emplace_back("", std::vector<Template::Node>{});

    const std::string& s = t.body_;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t open = s.find("{{", pos);
        if (open == std::string::npos) {
            break;
        }
        size_t close = s.find("}}", open + 2);
        if (close == std::string::npos) {
            throw Error("template-syntax", "unterminated '{{' at offset " + std::to_string(open));
        }
        if (open > pos) {
            Template::Node text;
            text.kind = Template::Node::Kind::Text;
            text.value = s.substr(pos, open - pos);
            frames.back().second.push_back(std::move(text));
        }
        std::string tag = s.substr(open + 2, close - open - 2);
        if (tag.empty()) {
            throw Error("template-syntax", "empty placeholder at offset " + std::to_string(open));
        }
        if (tag[0] == '#') {
            frames.emplace_back(tag.substr(1), std::vector<Template::Node>{});
        } else if (tag[0] == '/') {
            std::string name = tag.substr(1);
            if (frames.size() < 2 || frames.back().first != name) {
                throw Error("template-syntax", "mismatched section close '" + name + "'");
            }
            Template::Node section;
            section.kind = Template::Node::Kind::Section;
            section.value = name;
            section.children = std::move(frames.back().second);
            frames.pop_back();
            frames.back().second.push_back(std::move(section));
        } else {
            Template::Node var;
            var.kind = Template::Node::Kind::Var;
            var.value = tag;
            frames.back().second.push_back(std::move(var));
        }
        pos = close + 2;
    }
    if (frames.size() != 1) {
        throw Error("template-syntax", "unclosed section '" + frames.back().first + "'");
    }
    if (pos < s.size()) {
        Template::Node text;
        text.kind = Template::Node::Kind::Text;
        text.value = s.substr(pos);
        frames.back().second.push_back(std::move(text));
    }
    t.nodes_ = std::move(frames.back().second);
    return t;
}

namespace {

struct Scope {
    const TemplateContext* ctx;
    const Scope* parent;
};

const std::string* lookup_var(const Scope& scope, const std::string& name) {
    for (const Scope* s = &scope; s; s = s->parent) {
        auto it = s->ctx->vars.find(name);
        if (it != s->ctx->vars.end()) {
            return &it->second;
        }
    }
    return nullptr;
}

} // namespace

std::string Template::render(const TemplateContext& ctx) const {
    std::string out;
    out.reserve(body_.size());
    Scope root{&ctx, nullptr};

    // Recursive walk over the parsed node tree.
    struct Walker {
        static void walk(const std::vector<Node>& nodes, const Scope& scope, std::string& out) {
            for (const Node& node : nodes) {
                switch (node.kind) {
                case Node::Kind::Text:
                    out += node.value;
                    break;
                case Node::Kind::Var: {
                    const std::string* v = lookup_var(scope, node.value);
                    if (!v) {
                        throw Error("template-unbound", "unbound placeholder '" + node.value + "'");
                    }
                    out += *v;
                    break;
                }
                case Node::Kind::Section: {
                    bool resolved = false;
                    for (const Scope* s = &scope; s && !resolved; s = s->parent) {
                        auto lit = s->ctx->lists.find(node.value);
                        if (lit != s->ctx->lists.end()) {
                            for (const TemplateContext& item : lit->second) {
                                Scope inner{&item, &scope};
                                walk(node.children, inner, out);
                            }
                            resolved = true;
                            break;
                        }
                        auto fit = s->ctx->flags.find(node.value);
                        if (fit != s->ctx->flags.end()) {
                            if (fit->second) {
                                walk(node.children, scope, out);
                            }
                            resolved = true;
                            break;
                        }
                    }
                    if (!resolved) {
                        throw Error("template-unbound", "unbound section '" + node.value + "'");
                    }
                    break;
                }
                }
            }
        }
    };
    Walker::walk(nodes_, root, out);
    return out;
}

} // namespace exthink
