
def step_908(cfg):
    v0_s908 = []
    for v1_s908 in range(len(v2_s908)):
        if v3_s908(v2_s908[v1_s908]):
            v0_s908.append(v2_s908[v1_s908])
    return cfg

def step_228(cfg):
    v0_s228 = []
    for v1_s228 in range(len(v2_s228)):
        if v3_s228(v2_s228[v1_s228]):
            v0_s228 = v0_s228 + [v2_s228[v1_s228]]
    return cfg

def step_459(cfg):
    v0_s459 = []
    for v1_s459 in range(len(v2_s459)):
        if v3_s459(v2_s459[v1_s459]):
            v0_s459 = v0_s459 + [v2_s459[v1_s459]]
    return cfg

def step_690(cfg):
    v0_s690 = []
    for v1_s690 in range(len(v2_s690)):
        if v3_s690(v2_s690[v1_s690]):
            v0_s690 = v0_s690 + [v2_s690[v1_s690]]
    return cfg

def step_10(cfg):
    v0_s10 = []
    for v1_s10 in range(len(v2_s10)):
        if v3_s10(v2_s10[v1_s10]):
            v0_s10.append(v2_s10[v1_s10])
    return cfg

def step_241(cfg):
    v0_s241 = []
    for v1_s241 in range(len(v2_s241)):
        v3_s241 = v2_s241[v1_s241]
        if v4_s241(v3_s241):
            v0_s241.append(v3_s241)
    return cfg

def step_472(cfg):
    v0_s472 = []
    for v1_s472 in range(len(v2_s472)):
        v3_s472 = v2_s472[v1_s472]
        if v4_s472(v3_s472):
            v0_s472.append(v3_s472)
    return cfg

def step_703(cfg):
    v0_s703 = []
    for v1_s703 in range(len(v2_s703)):
        v3_s703 = v2_s703[v1_s703]
        if v4_s703(v3_s703):
            v0_s703.append(v3_s703)
    return cfg

def step_23(cfg):
    v0_s23 = []
    for v1_s23 in range(len(v2_s23)):
        if v3_s23(v2_s23[v1_s23]):
            v0_s23 += [v2_s23[v1_s23]]
    return cfg

def step_254(cfg):
    v0_s254 = []
    for v1_s254 in range(len(v2_s254)):
        if v3_s254(v2_s254[v1_s254]):
            v0_s254 += [v2_s254[v1_s254]]
    return cfg

def step_485(cfg):
    v0_s485 = []
    for v1_s485 in range(len(v2_s485)):
        if v3_s485(v2_s485[v1_s485]):
            v0_s485 += [v2_s485[v1_s485]]
    return cfg

def step_716(cfg):
    v0_s716 = []
    for v1_s716 in range(len(v2_s716)):
        if v3_s716(v2_s716[v1_s716]):
            v0_s716 += [v2_s716[v1_s716]]
    return cfg
