#include "treealg/trees.hpp"

#include <cctype>

namespace treealg {

void TextCursor::skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool TextCursor::atEnd() {
    skipSpace();
    return pos_ >= text_.size();
}

char TextCursor::peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool TextCursor::consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
}

bool TextCursor::consume(std::string_view token) {
    skipSpace();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
}

void TextCursor::expect(char c) {
    if (!consume(c)) fail(std::string("'") + c + "'");
}

void TextCursor::fail(const std::string& expected) const { throw ParseError(pos_, expected); }

Tree TextCursor::readTree() {
    char c = peek();
    if (c == '1') {
        ++pos_;
        return Tree();
    }
    if (c == 'o' || c == '|') {
        ++pos_;
        return Tree::leaf();
    }
    if (c == 'x') {
        ++pos_;
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("variable index after 'x'");
        int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (k < 1) {
            pos_ = start;
            fail("variable index >= 1");
        }
        return Tree::var(k);
    }
    if (c == '(') {
        ++pos_;
        std::vector<Tree> kids;
        while (peek() != ')') {
            if (atEnd()) fail("')'");
            std::size_t at = pos_;
            Tree t = readTree();
            if (t.empty()) {
                pos_ = at;
                fail("non-empty child tree");
            }
            kids.push_back(std::move(t));
        }
        if (kids.empty()) fail("at least one child");
        ++pos_;
        return Tree::node(std::move(kids));
    }
    fail("tree ('1', 'o', '|', 'x<k>' or '(')");
}

Forest TextCursor::readForest() {
    expect('[');
    std::vector<Tree> trees;
    if (consume(']')) return Forest();
    while (true) {
        std::size_t at = offset();
        Tree t = readTree();
        if (t.empty()) {
            seek(at);
            fail("non-empty tree in forest");
        }
        trees.push_back(std::move(t));
        if (consume(']')) break;
        expect(';');
    }
    return Forest(std::move(trees));
}

Tree parseTree(std::string_view text) {
    TextCursor cur(text);
    Tree t = cur.readTree();
    if (!cur.atEnd()) cur.fail("end of input");
    return t;
}

Forest parseForest(std::string_view text) {
    TextCursor cur(text);
    Forest f = cur.readForest();
    if (!cur.atEnd()) cur.fail("end of input");
    return f;
}

namespace {

void printLeaf(const Tree& t, std::string& out) {
    if (t.label().isAnonymous())
        out += 'o';
    else
        out += 'x' + std::to_string(t.label().index());
}

void printRec(const Tree& t, std::string& out) {
    if (t.isLeaf()) {
        printLeaf(t, out);
        return;
    }
    out += '(';
    bool first = true;
    for (const auto& c : t.children()) {
        if (!first) out += ' ';
        first = false;
        printRec(c, out);
    }
    out += ')';
}

void malcevRec(const Tree& t, std::vector<std::string>& tokens) {
    if (t.isLeaf()) {
        std::string s;
        printLeaf(t, s);
        tokens.push_back(s);
        return;
    }
    tokens.push_back("c");
    for (const auto& c : t.children()) malcevRec(c, tokens);
}

}  // namespace

std::string printTree(const Tree& t) {
    if (t.empty()) return "1";
    std::string out;
    printRec(t, out);
    return out;
}

std::string printForest(const Forest& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += "; ";
        out += printTree(f.trees()[i]);
    }
    return out + "]";
}

std::string printMalcev(const Tree& t) {
    if (t.empty()) return "1";
    if (!isBinary(t)) throw Error(ErrorCode::NotBinary, "Malcev strings are defined for binary trees");
    std::vector<std::string> tokens;
    malcevRec(t, tokens);
    std::string out;
    for (std::size_t i = 0; i < tokens.size();) {
        std::size_t j = i;
        while (j < tokens.size() && tokens[j] == tokens[i] && tokens[i] == "c") ++j;
        if (!out.empty()) out += ' ';
        if (j - i > 1) {
            out += "c^" + std::to_string(j - i);
            i = j;
        } else {
            out += tokens[i++];
        }
    }
    return out;
}

}  // namespace treealg
