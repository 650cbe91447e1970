//! Decks of oriented cards and the red/black coloring by index parity.
//!
//! The deck text format is the interchange form used everywhere: comma-separated
//! tokens, a token being an optional `~` (face up) followed by the card's
//! 1-based original index. Canonical output carries no spaces: `~5,~4,~3,1,6,~2`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{DeckError, PermError};
use crate::perm::SignedPermutation;

/// Physical orientation of a card. Every standard scenario starts face down.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    #[default]
    FaceDown,
    FaceUp,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::FaceDown => Orientation::FaceUp,
            Orientation::FaceUp => Orientation::FaceDown,
        }
    }

    pub fn is_face_up(self) -> bool {
        matches!(self, Orientation::FaceUp)
    }
}

/// A card: where it started (1-based) and which way it faces now.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Card {
    pub original_index: usize,
    pub orientation: Orientation,
}

impl Card {
    pub fn face_down(original_index: usize) -> Self {
        Card {
            original_index,
            orientation: Orientation::FaceDown,
        }
    }

    pub fn face_up(original_index: usize) -> Self {
        Card {
            original_index,
            orientation: Orientation::FaceUp,
        }
    }

    pub fn flipped(self) -> Self {
        Card {
            orientation: self.orientation.flipped(),
            ..self
        }
    }

    pub fn is_face_up(self) -> bool {
        self.orientation.is_face_up()
    }
}

/// An ordered pile of distinct cards.
///
/// A deck fresh from [`Deck::new`] holds indices `1..=n`. Piles produced by
/// splitting keep their parent's indices, so the type only requires *distinct*
/// indices; [`Deck::is_canonical`] tells the two apart. Decks are immutable
/// values: every shuffle returns a new deck.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Deck {
    cards: Vec<Card>,
}

impl Deck {
    /// The pristine deck: cards `1..=n` in order, all face down.
    pub fn new(n: usize) -> Result<Self, DeckError> {
        if n == 0 {
            return Err(DeckError::EmptyDeck);
        }
        Ok(Deck {
            cards: (1..=n).map(Card::face_down).collect(),
        })
    }

    /// Builds a deck from explicit cards. Indices must be distinct and >= 1,
    /// but need not form `1..=n` (split piles keep parent indices).
    pub fn from_cards(cards: Vec<Card>) -> Result<Self, DeckError> {
        if cards.is_empty() {
            return Err(DeckError::EmptyDeck);
        }
        let mut seen = HashSet::with_capacity(cards.len());
        for card in &cards {
            if card.original_index == 0 {
                return Err(DeckError::ZeroIndex);
            }
            if !seen.insert(card.original_index) {
                return Err(DeckError::DuplicateIndex(card.original_index));
            }
        }
        Ok(Deck { cards })
    }

    /// Internal constructor for shuffle results, which permute an already
    /// valid deck and so cannot break the invariants.
    pub(crate) fn from_cards_unchecked(cards: Vec<Card>) -> Self {
        debug_assert!(!cards.is_empty());
        Deck { cards }
    }

    pub fn len(&self) -> usize {
        self.cards.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cards.is_empty()
    }

    pub fn cards(&self) -> &[Card] {
        &self.cards
    }

    /// Card at 1-based position.
    pub fn card_at(&self, position: usize) -> Option<&Card> {
        if position == 0 {
            return None;
        }
        self.cards.get(position - 1)
    }

    /// 1-based position of the card with the given original index.
    pub fn position_of(&self, original_index: usize) -> Option<usize> {
        self.cards
            .iter()
            .position(|c| c.original_index == original_index)
            .map(|i| i + 1)
    }

    /// True when the indices are exactly `1..=n` (a full deck, not a split pile).
    pub fn is_canonical(&self) -> bool {
        let n = self.cards.len();
        self.cards.iter().all(|c| c.original_index <= n)
    }

    /// The unique signed permutation `p` with `Deck::new(n)?.apply(&p) == self`.
    pub fn as_perm(&self) -> Result<SignedPermutation, DeckError> {
        if !self.is_canonical() {
            return Err(DeckError::NotCanonical);
        }
        let images = self
            .cards
            .iter()
            .map(|c| {
                let v = c.original_index as i32;
                if c.is_face_up() {
                    -v
                } else {
                    v
                }
            })
            .collect();
        Ok(SignedPermutation::from_images_unchecked(images))
    }

    /// Applies a signed permutation: position `q` of the result holds the card
    /// from position `|images[q]|`, flipped when the image is negative.
    pub fn apply(&self, p: &SignedPermutation) -> Result<Deck, PermError> {
        if p.len() != self.len() {
            return Err(PermError::LengthMismatch {
                left: self.len(),
                right: p.len(),
            });
        }
        let cards = p
            .images()
            .iter()
            .map(|&v| {
                let card = self.cards[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    card.flipped()
                } else {
                    card
                }
            })
            .collect();
        Ok(Deck { cards })
    }

    /// Per-position signed index: negative when face up. Equals the canonical
    /// permutation encoding on full decks and stays usable on split piles,
    /// which makes it the deduplication key for orbit search.
    pub fn signed_code(&self) -> Vec<i32> {
        self.cards
            .iter()
            .map(|c| {
                let v = c.original_index as i32;
                if c.is_face_up() {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }

    /// Canonical text: comma-separated, `~` marking face-up cards, no spaces.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Deck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, card) in self.cards.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if card.is_face_up() {
                f.write_str("~")?;
            }
            write!(f, "{}", card.original_index)?;
        }
        Ok(())
    }
}

impl FromStr for Deck {
    type Err = DeckError;

    /// Parses deck text. Tokens may carry surrounding whitespace; the deck
    /// must hold indices `1..=n` exactly.
    fn from_str(s: &str) -> Result<Self, DeckError> {
        let mut cards = Vec::new();
        for (i, raw) in s.split(',').enumerate() {
            let token_no = i + 1;
            let token = raw.trim();
            if token.is_empty() {
                return Err(DeckError::Parse {
                    token: token_no,
                    message: "empty token".into(),
                });
            }
            let (orientation, digits) = match token.strip_prefix('~') {
                Some(rest) => (Orientation::FaceUp, rest),
                None => (Orientation::FaceDown, token),
            };
            let index: usize = digits.parse().map_err(|_| DeckError::Parse {
                token: token_no,
                message: format!("expected a card index, found {token:?}"),
            })?;
            if index == 0 {
                return Err(DeckError::Parse {
                    token: token_no,
                    message: "card indices are 1-based; 0 is invalid".into(),
                });
            }
            cards.push(Card {
                original_index: index,
                orientation,
            });
        }
        let n = cards.len();
        let mut seen = vec![false; n];
        for card in &cards {
            if card.original_index > n {
                return Err(DeckError::IndexOutOfRange {
                    index: card.original_index,
                    len: n,
                });
            }
            if seen[card.original_index - 1] {
                return Err(DeckError::DuplicateIndex(card.original_index));
            }
            seen[card.original_index - 1] = true;
        }
        Ok(Deck { cards })
    }
}

/// Card colors. The scheme decides which color the odd indices take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Black,
}

impl Color {
    pub fn other(self) -> Self {
        match self {
            Color::Red => Color::Black,
            Color::Black => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Black => "black",
        })
    }
}

/// Colors as a pure function of index parity: odd indices take `first_color`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorScheme {
    pub first_color: Color,
}

impl ColorScheme {
    pub fn red_first() -> Self {
        ColorScheme {
            first_color: Color::Red,
        }
    }

    pub fn black_first() -> Self {
        ColorScheme {
            first_color: Color::Black,
        }
    }

    pub fn color_of(&self, card: &Card) -> Color {
        if card.original_index % 2 == 1 {
            self.first_color
        } else {
            self.first_color.other()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deck(text: &str) -> Deck {
        text.parse().unwrap()
    }

    #[test]
    fn new_deck_is_identity_order_face_down() {
        let d = Deck::new(4).unwrap();
        assert_eq!(d.to_string(), "1,2,3,4");
        assert!(d.cards().iter().all(|c| !c.is_face_up()));
        let d6 = Deck::new(6).unwrap();
        assert_eq!(d6.to_string(), "1,2,3,4,5,6");
        let d1 = Deck::new(1).unwrap();
        assert_eq!(d1.to_string(), "1");
    }

    #[test]
    fn new_deck_rejects_zero() {
        assert_eq!(Deck::new(0), Err(DeckError::EmptyDeck));
    }

    #[test]
    fn parse_canonical_example() {
        let d = deck("~5,~4,~3,1,6,~2");
        assert_eq!(d.len(), 6);
        assert_eq!(d.card_at(1).unwrap().original_index, 5);
        assert!(d.card_at(1).unwrap().is_face_up());
        assert!(!d.card_at(4).unwrap().is_face_up());
        assert_eq!(d.to_string(), "~5,~4,~3,1,6,~2");
    }

    #[test]
    fn parse_accepts_token_whitespace() {
        let d = deck(" ~2 ,\t1 , 3 ");
        assert_eq!(d.to_string(), "~2,1,3");
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            "1,,3".parse::<Deck>(),
            Err(DeckError::Parse { token: 2, .. })
        ));
        assert!(matches!(
            "1,x".parse::<Deck>(),
            Err(DeckError::Parse { token: 2, .. })
        ));
        assert_eq!("1,1".parse::<Deck>(), Err(DeckError::DuplicateIndex(1)));
        assert_eq!(
            "1,5".parse::<Deck>(),
            Err(DeckError::IndexOutOfRange { index: 5, len: 2 })
        );
        assert!(matches!(
            "0,1".parse::<Deck>(),
            Err(DeckError::Parse { token: 1, .. })
        ));
    }

    #[test]
    fn from_cards_allows_split_pile_indices() {
        let pile = Deck::from_cards(vec![Card::face_down(8), Card::face_up(3)]).unwrap();
        assert!(!pile.is_canonical());
        assert_eq!(pile.as_perm(), Err(DeckError::NotCanonical));
        assert_eq!(pile.signed_code(), vec![8, -3]);
    }

    #[test]
    fn from_cards_rejects_duplicates() {
        let cards = vec![Card::face_down(2), Card::face_up(2)];
        assert_eq!(Deck::from_cards(cards), Err(DeckError::DuplicateIndex(2)));
    }

    #[test]
    fn position_lookup() {
        let d = deck("~5,~4,~3,1,6,~2");
        assert_eq!(d.position_of(1), Some(4));
        assert_eq!(d.position_of(5), Some(1));
        assert_eq!(d.position_of(9), None);
    }

    #[test]
    fn colors_follow_index_parity() {
        let black_first = ColorScheme::black_first();
        assert_eq!(black_first.color_of(&Card::face_down(1)), Color::Black);
        assert_eq!(black_first.color_of(&Card::face_down(2)), Color::Red);
        let red_first = ColorScheme::red_first();
        assert_eq!(red_first.color_of(&Card::face_down(5)), Color::Red);
    }
}
