// Partition text format and JSON codec.

#include "zsp/codec.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace zsp {

namespace {

const std::string kTrailerPrefix = "A partition for sets of sizes:";

bool is_blank(const std::string& line) {
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

// Parse one set line: tuples "(a, b, ...)" separated by commas.
std::vector<code_t> parse_set_line(const GroupSpec& g, const std::string& line) {
    std::vector<code_t> set;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] != '(') {
            ++i;
            continue;
        }
        std::size_t close = line.find(')', i);
        if (close == std::string::npos)
            fail(ErrorKind::BadInput, "unbalanced tuple in partition text: " + line);
        set.push_back(parse_element(g, line.substr(i, close - i + 1)).code);
        i = close + 1;
    }
    if (set.empty()) fail(ErrorKind::BadInput, "set line without tuples: " + line);
    return set;
}

SizeTriple parse_trailer(const std::string& line) {
    // whitespace-tolerant "a*3  b*4  c*5" after the prefix
    std::size_t at = line.find(kTrailerPrefix);
    std::istringstream in(line.substr(at + kTrailerPrefix.size()));
    SizeTriple t;
    bool got3 = false, got4 = false, got5 = false;
    std::string term;
    while (in >> term) {
        std::size_t star = term.find('*');
        if (star == std::string::npos)
            fail(ErrorKind::BadInput, "malformed size term in trailer: " + term);
        std::uint64_t count = std::stoull(term.substr(0, star));
        std::string size = term.substr(star + 1);
        if (size == "3") { t.a = count; got3 = true; }
        else if (size == "4") { t.b = count; got4 = true; }
        else if (size == "5") { t.c = count; got5 = true; }
        else fail(ErrorKind::BadInput, "unexpected part size in trailer: " + term);
    }
    if (!got3 || !got4 || !got5)
        fail(ErrorKind::BadInput, "trailer must list the *3, *4 and *5 counts: " + line);
    return t;
}

}  // namespace

std::vector<TextBlock> parse_partition_text(const GroupSpec& g, const std::string& text) {
    std::vector<TextBlock> blocks;
    TextBlock current;
    current.family.group = g;
    bool open = false;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (is_blank(line)) continue;
        if (line.find(kTrailerPrefix) != std::string::npos) {
            if (!open)
                fail(ErrorKind::BadInput, "trailer line without a preceding block");
            current.header = parse_trailer(line);
            blocks.push_back(std::move(current));
            current = TextBlock{};
            current.family.group = g;
            open = false;
            continue;
        }
        current.family.sets.push_back(parse_set_line(g, line));
        open = true;
    }
    if (open) fail(ErrorKind::BadInput, "partition text ends without a trailer line");
    return blocks;
}

std::string format_partition_block(const TextBlock& block) {
    std::ostringstream out;
    const GroupSpec& g = block.family.group;
    for (const auto& set : block.family.sets) {
        for (std::size_t j = 0; j < set.size(); ++j) {
            if (j) out << ", ";
            out << g.format_element(set[j]);
        }
        out << '\n';
    }
    out << kTrailerPrefix << "  " << block.header.a << "*3  " << block.header.b << "*4  "
        << block.header.c << "*5\n";
    return out.str();
}

std::string format_partition_text(const std::vector<TextBlock>& blocks) {
    std::ostringstream out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) out << '\n';
        out << format_partition_block(blocks[i]);
    }
    return out.str();
}

std::string family_to_json(const SubsetFamily& family, const std::string& ground_descriptor) {
    nlohmann::json doc;
    doc["group"] = family.group.to_string();
    doc["ground"] = ground_descriptor;
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& set : family.sets) {
        nlohmann::json jset = nlohmann::json::array();
        for (code_t c : set) {
            nlohmann::json tuple = nlohmann::json::array();
            for (auto r : family.group.residues_of(c)) tuple.push_back(r);
            jset.push_back(std::move(tuple));
        }
        sets.push_back(std::move(jset));
    }
    doc["sets"] = std::move(sets);
    return doc.dump(2) + "\n";
}

std::pair<SubsetFamily, std::string> family_from_json(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::BadInput, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.contains("group") || !doc.contains("sets"))
        fail(ErrorKind::BadInput, "JSON family needs \"group\" and \"sets\"");
    SubsetFamily family;
    family.group = parse_group_spec(doc["group"].get<std::string>());
    for (const auto& jset : doc["sets"]) {
        std::vector<code_t> set;
        for (const auto& tuple : jset) {
            std::vector<std::uint64_t> res;
            for (const auto& r : tuple) res.push_back(r.get<std::uint64_t>());
            set.push_back(family.group.encode(res));
        }
        family.sets.push_back(std::move(set));
    }
    std::string ground = doc.value("ground", std::string{});
    return {std::move(family), std::move(ground)};
}

}  // namespace zsp
