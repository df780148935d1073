#pragma once

// Line-oriented text format for complexes, morphisms and snake diagrams.
//
//   instance set                  | instance linear P
//   complex NAME LO HI
//     X 2 : {a, b}                | X 2 : dim 3
//     T 2 : {t} up {t>a} down {t>c}
//                                 | T 2 : dim 1 up [[1,0,0]] down [[1],[0]]
//   end
//   hor NAME : SRC -> TGT         (also ver)
//     level 2 : {a>a}             | level 2 : [[1],[0]]
//     trans 2 : {}
//   end
//   map NAME : SRC -> TGT via MID
//     back 2 : ...   front 2 : ...   tback 2 : ...   tfront 2 : ...
//   end
//   ses NAME : HOR VER
//   snake NAME weak|strong
//     object A : {a}
//     A>B : {a>a}
//   end
//
// Set maps left out are inclusions by element name; linear maps must be given.
// Everything after '#' on a line is a comment.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "acgw/chains.hpp"
#include "acgw/finset.hpp"
#include "acgw/linear.hpp"
#include "acgw/snake.hpp"

namespace acgw {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

template <AcgwInstance I>
struct NamedSES {
    std::string hor;
    std::string ver;
    ChainSES<I> ses;
};

template <AcgwInstance I>
struct NamedSnake {
    bool strong = false;
    StrongSnakeInput<I> input;  // weak diagrams leave abar_a / cbar_c unused
};

template <AcgwInstance I>
struct NamedHor {
    std::string source, target;
    HorChainMor<I> mor;
};

template <AcgwInstance I>
struct NamedVer {
    std::string source, target;
    VerChainMor<I> mor;
};

template <AcgwInstance I>
struct NamedMap {
    std::string source, middle, target;
    ChainMap<I> map;
};

template <AcgwInstance I>
struct DocumentOf {
    I inst{};
    std::vector<std::pair<std::string, ChainComplex<I>>> complexes;
    std::vector<std::pair<std::string, NamedHor<I>>> hors;
    std::vector<std::pair<std::string, NamedVer<I>>> vers;
    std::vector<std::pair<std::string, NamedMap<I>>> maps;
    std::vector<std::pair<std::string, NamedSES<I>>> seses;
    std::vector<std::pair<std::string, NamedSnake<I>>> snakes;

    const ChainComplex<I>* complex(const std::string& name) const {
        for (const auto& [n, c] : complexes)
            if (n == name) return &c;
        return nullptr;
    }
};

using SetDocument = DocumentOf<FinSetInstance>;
using LinearDocument = DocumentOf<LinearInstance>;
using Document = std::variant<SetDocument, LinearDocument>;

/// Throws ParseError with line and column on malformed input, or on data that
/// fails its structural checks (wrong shapes, unknown names).
Document parse_document(const std::string& text);

/// Canonical text form; set maps equal to inclusion by name are omitted.
std::string serialize_document(const Document& doc);

std::string describe_object(const FinSetObj& s);
std::string describe_object(const VectObj& v);

}  // namespace acgw
