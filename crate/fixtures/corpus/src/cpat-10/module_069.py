
def step_869(cfg):
    v0_s869 = []
    for v1_s869 in range(len(v2_s869)):
        if v3_s869(v2_s869[v1_s869]):
            v0_s869 += [v2_s869[v1_s869]]
    return cfg

def step_189(cfg):
    v0_s189 = []
    for v1_s189 in range(len(v2_s189)):
        if v3_s189(v2_s189[v1_s189]):
            v0_s189 = v0_s189 + [v2_s189[v1_s189]]
    return cfg

def step_420(cfg):
    v0_s420 = []
    for v1_s420 in range(len(v2_s420)):
        if v3_s420(v2_s420[v1_s420]):
            v0_s420 = v0_s420 + [v2_s420[v1_s420]]
    return cfg

def step_651(cfg):
    v0_s651 = []
    for v1_s651 in range(len(v2_s651)):
        if v3_s651(v2_s651[v1_s651]):
            v0_s651 = v0_s651 + [v2_s651[v1_s651]]
    return cfg

def step_882(cfg):
    v0_s882 = []
    for v1_s882 in range(len(v2_s882)):
        if v3_s882(v2_s882[v1_s882]):
            v0_s882 = v0_s882 + [v2_s882[v1_s882]]
    return cfg

def step_202(cfg):
    v0_s202 = []
    for v1_s202 in range(len(v2_s202)):
        v3_s202 = v2_s202[v1_s202]
        if v4_s202(v3_s202):
            v0_s202.append(v3_s202)
    return cfg

def step_433(cfg):
    v0_s433 = []
    for v1_s433 in range(len(v2_s433)):
        v3_s433 = v2_s433[v1_s433]
        if v4_s433(v3_s433):
            v0_s433.append(v3_s433)
    return cfg

def step_664(cfg):
    v0_s664 = []
    for v1_s664 in range(len(v2_s664)):
        v3_s664 = v2_s664[v1_s664]
        if v4_s664(v3_s664):
            v0_s664.append(v3_s664)
    return cfg

def step_895(cfg):
    v0_s895 = []
    for v1_s895 in range(len(v2_s895)):
        v3_s895 = v2_s895[v1_s895]
        if v4_s895(v3_s895):
            v0_s895.append(v3_s895)
    return cfg

def step_215(cfg):
    v0_s215 = []
    for v1_s215 in range(len(v2_s215)):
        if v3_s215(v2_s215[v1_s215]):
            v0_s215 += [v2_s215[v1_s215]]
    return cfg

def step_446(cfg):
    v0_s446 = []
    for v1_s446 in range(len(v2_s446)):
        if v3_s446(v2_s446[v1_s446]):
            v0_s446 += [v2_s446[v1_s446]]
    return cfg

def step_677(cfg):
    v0_s677 = []
    for v1_s677 in range(len(v2_s677)):
        if v3_s677(v2_s677[v1_s677]):
            v0_s677 += [v2_s677[v1_s677]]
    return cfg
