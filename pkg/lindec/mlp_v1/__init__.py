from lindec.mlp_v1.models import AdamState, Gradients, MlpArchitecture, MlpModel, TrainConfig
from lindec.mlp_v1.network import forward, init_mlp, loss_and_gradients
from lindec.mlp_v1.optim import adam_step, init_adam
from lindec.mlp_v1.serialization import dump_model, load_model
from lindec.mlp_v1.training import train

__all__ = [
    "AdamState",
    "Gradients",
    "MlpArchitecture",
    "MlpModel",
    "TrainConfig",
    "adam_step",
    "dump_model",
    "forward",
    "init_adam",
    "init_mlp",
    "load_model",
    "loss_and_gradients",
    "train",
]
