pub mod applicability;
pub mod applier;
pub mod config;
pub mod cpat;
pub mod harness;
pub mod interp;
pub mod llm;
pub mod pipeline;
pub mod rulegen;
pub mod store;
pub mod synthesis;
pub mod syntax;
pub mod template;
pub mod tuner;
