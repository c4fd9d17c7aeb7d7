// Tokenization and vocabulary construction.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace probsent {

inline const std::string kUnkToken = "<unk>";

// Lowercased, whitespace-split tokens. Runs of whitespace collapse; empty
// input yields an empty list.
std::vector<std::string> tokenize(std::string_view line);

// Bijective token<->id table with corpus frequencies. Id 0 is always the
// unknown symbol; it absorbs the counts of every token pruned by min_count.
struct Vocabulary {
    std::vector<std::string> id_to_token;
    std::unordered_map<std::string, int> token_to_id;
    std::vector<int64_t> frequency;

    static constexpr int kUnkId = 0;

    int size() const { return static_cast<int>(id_to_token.size()); }

    // Returns the token's id, or the unk id for out-of-vocabulary tokens.
    int lookup(const std::string& token) const {
        auto it = token_to_id.find(token);
        return it == token_to_id.end() ? kUnkId : it->second;
    }
};

// Builds a vocabulary from token streams. Tokens seen fewer than min_count
// times map to unk. Known ids are assigned by descending frequency (ties by
// token) so the table order is independent of input order.
Vocabulary build_vocab(const std::vector<std::vector<std::string>>& sentences,
                       int min_count);

// Constructs a vocabulary from an explicit token list (id order preserved,
// unk inserted at id 0 if absent). Frequencies start at zero.
Vocabulary vocab_from_tokens(const std::vector<std::string>& tokens);

}  // namespace probsent
