#ifndef CGA_NCPOLY_HPP
#define CGA_NCPOLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cga/field.hpp"

namespace cga {

// A word in the free monoid on the generator alphabet; the empty word is the
// multiplicative identity.
using Word = std::vector<std::uint8_t>;

class GeneratorSet;
using GenSetPtr = std::shared_ptr<const GeneratorSet>;

// Alphabet of free-algebra generators together with the data the monomial
// order needs: a weight per generator (graded comparison) and a precedence
// rank (lexicographic tie-break, higher rank = greater).
class GeneratorSet {
public:
    struct Gen {
        std::string name;
        unsigned weight = 1;
        int rank = 0;
    };

    static GenSetPtr make(FieldPtr f, std::vector<Gen> gens);

    const FieldPtr& field() const { return f_; }
    std::size_t size() const { return gens_.size(); }
    const Gen& gen(std::size_t i) const { return gens_[i]; }
    std::size_t index_of(const std::string& name) const;

    unsigned weight(const Word& w) const;
    // Total monomial order: weight, then length, then precedence-lex.
    // Returns <0, 0, >0.
    int compare(const Word& a, const Word& b) const;

    std::string word_str(const Word& w) const;

private:
    FieldPtr f_;
    std::vector<Gen> gens_;
    GeneratorSet(FieldPtr f, std::vector<Gen> g) : f_(std::move(f)), gens_(std::move(g)) {}
};

// Noncommutative polynomial: finitely many words with nonzero exact
// coefficients.
class NCPoly {
public:
    NCPoly() = default; // empty shell; assign before use
    explicit NCPoly(GenSetPtr g) : g_(std::move(g)) {}

    static NCPoly constant(const GenSetPtr& g, const FieldElement& c);
    static NCPoly one(const GenSetPtr& g);
    static NCPoly generator(const GenSetPtr& g, std::size_t index);
    static NCPoly word(const GenSetPtr& g, Word w);

    const GenSetPtr& gens() const { return g_; }
    const std::map<Word, FieldElement>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return t_.size(); }

    void add_term(const Word& w, const FieldElement& c);
    FieldElement coeff(const Word& w) const;
    // Largest word in the monomial order (polynomial must be nonzero).
    const Word& leading_word() const;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    bool operator==(const NCPoly& o) const;
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    NCPoly scaled(const FieldElement& s) const;
    NCPoly pow(unsigned e) const;

    std::string str() const;

private:
    GenSetPtr g_;
    std::map<Word, FieldElement> t_;
};

} // namespace cga

#endif
