//! Brute-force oracles, the seeded error channel and the Monte-Carlo trial
//! harness used to check the decoders.

mod channel;
mod oracle;
mod trials;

pub use channel::random_error;
pub use oracle::{
    classify, enumerate_codewords, message_count, min_distance, nearest_list, CodeClass, Codebook, DEFAULT_ENUM_CAP,
};
pub use trials::{run_trials, TrialConfig, TrialConfigFile, TrialStats, TrialTarget, WeightStats, CSV_HEADER};
